#pragma once

#include <cstdint>

namespace cyc {

/// Size guards shared by every enumerating procedure.
struct Limits {
  std::uint64_t maxDivisors = 1'000'000;
  /// Number of maps h: D -> C enumerated by `satisfies`.
  std::uint64_t maxMaps = 10'000'000;
  /// Vertex bound for explicit digraph constructions.
  std::uint64_t maxVertices = 1'000'000;
  /// Homomorphism search: source / target vertex bounds.
  std::uint64_t maxSearchSource = 10'000;
  std::uint64_t maxSearchTarget = 64;
  /// Number of terms in an iterated times product (canon, realization).
  std::uint64_t maxProductTerms = 1'000'000;
};

}  // namespace cyc
