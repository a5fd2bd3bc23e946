#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cyc {

/// Explicit finite digraph on vertices 0..vertexCount-1.
struct Digraph {
  using Vertex = std::size_t;
  using Edge = std::pair<Vertex, Vertex>;

  std::size_t vertexCount = 0;
  /// Sorted, duplicate-free.
  std::vector<Edge> edges;
  /// Optional per-vertex annotation; empty or of size vertexCount.
  std::vector<std::string> labels;

  /// Sorts and deduplicates `edges`; throws DomainError on out-of-range endpoints.
  void normalize();

  bool hasEdge(Vertex u, Vertex v) const;
  std::vector<std::size_t> outDegrees() const;
  std::vector<std::size_t> inDegrees() const;
};

/// Cycle lengths of a digraph in which every vertex has in- and out-degree
/// exactly one, sorted ascending with repetition. Throws DomainError otherwise.
std::vector<std::uint64_t> cycleLengths(const Digraph& g);

/// Cycle lengths of a functional permutation given as a successor array.
std::vector<std::uint64_t> cycleLengths(const std::vector<std::size_t>& successor);

}  // namespace cyc
