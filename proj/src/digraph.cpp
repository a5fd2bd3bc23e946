#include "cyclattice/digraph.hpp"

#include <algorithm>

#include "cyclattice/errors.hpp"

namespace cyc {

void Digraph::normalize() {
  for (const auto& [u, v] : edges)
    if (u >= vertexCount || v >= vertexCount)
      throw DomainError("digraph edge endpoint out of range");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Digraph::hasEdge(Vertex u, Vertex v) const {
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

std::vector<std::size_t> Digraph::outDegrees() const {
  std::vector<std::size_t> deg(vertexCount, 0);
  for (const auto& e : edges) ++deg[e.first];
  return deg;
}

std::vector<std::size_t> Digraph::inDegrees() const {
  std::vector<std::size_t> deg(vertexCount, 0);
  for (const auto& e : edges) ++deg[e.second];
  return deg;
}

std::vector<std::uint64_t> cycleLengths(const std::vector<std::size_t>& successor) {
  const std::size_t n = successor.size();
  std::vector<bool> seen(n, false);
  std::vector<std::uint64_t> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    std::size_t v = start;
    while (!seen[v]) {
      seen[v] = true;
      v = successor[v];
      ++len;
    }
    if (v != start) throw DomainError("successor map is not a permutation");
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> cycleLengths(const Digraph& g) {
  std::vector<std::size_t> succ(g.vertexCount, g.vertexCount);
  std::vector<std::size_t> indeg(g.vertexCount, 0);
  for (const auto& [u, v] : g.edges) {
    if (succ[u] != g.vertexCount) throw DomainError("vertex with out-degree above one");
    succ[u] = v;
    ++indeg[v];
  }
  for (std::size_t v = 0; v < g.vertexCount; ++v)
    if (succ[v] == g.vertexCount || indeg[v] != 1)
      throw DomainError("digraph is not a disjoint union of cycles");
  return cycleLengths(succ);
}

}  // namespace cyc
