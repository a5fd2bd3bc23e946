#include "cyclattice/cycle_set.hpp"

#include <algorithm>

#include "cyclattice/errors.hpp"

namespace cyc {

CycleSet::CycleSet(std::initializer_list<PosInt> lengths)
    : CycleSet(std::vector<PosInt>(lengths)) {}

CycleSet::CycleSet(std::vector<PosInt> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw DomainError("cycle set must be nonempty");
  std::sort(lengths_.begin(), lengths_.end());
  lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
  if (lengths_.front() == 0) throw DomainError("cycle lengths must be positive");
}

bool CycleSet::contains(PosInt a) const noexcept {
  return std::binary_search(lengths_.begin(), lengths_.end(), a);
}

PosInt CycleSet::lcm() const {
  PosInt out = 1;
  for (PosInt a : lengths_) out = cyc::lcm(out, a);
  return out;
}

PosInt CycleSet::vertexCount() const {
  PosInt out = 0;
  for (PosInt a : lengths_)
    if (__builtin_add_overflow(out, a, &out)) throw OverflowError("vertex count overflow");
  return out;
}

std::string CycleSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out + "}";
}

CycleSet dotdiv(const CycleSet& set, PosInt c) {
  std::vector<PosInt> out;
  out.reserve(set.size());
  for (PosInt a : set) out.push_back(dotdiv(a, c));
  return CycleSet(std::move(out));
}

CycleSet rad(const CycleSet& set) {
  std::vector<PosInt> out;
  out.reserve(set.size());
  for (PosInt a : set) out.push_back(rad(a));
  return CycleSet(std::move(out));
}

CycleSet timesProduct(const CycleSet& lhs, const CycleSet& rhs) {
  std::vector<PosInt> out;
  out.reserve(lhs.size() * rhs.size());
  for (PosInt a : lhs)
    for (PosInt b : rhs) out.push_back(lcm(a, b));
  return CycleSet(std::move(out));
}

CycleSet bulletProduct(const CycleSet& lhs, const CycleSet& rhs) {
  std::vector<PosInt> out;
  out.reserve(lhs.size() * rhs.size());
  for (PosInt a : lhs)
    for (PosInt b : rhs) out.push_back(checkedMul(a, b));
  return CycleSet(std::move(out));
}

CycleSet bulletPower(const CycleSet& set, unsigned k) {
  if (k == 0) throw DomainError("bullet power exponent must be positive");
  const CycleSet base = reduceByDivisibility(set);
  CycleSet out = base;
  for (unsigned i = 1; i < k; ++i) out = reduceByDivisibility(bulletProduct(out, base));
  return out;
}

bool homMaps(const CycleSet& from, const CycleSet& to) noexcept {
  return std::all_of(from.begin(), from.end(), [&](PosInt a) {
    return std::any_of(to.begin(), to.end(), [a](PosInt b) { return a % b == 0; });
  });
}

CycleSet reduceByDivisibility(const CycleSet& set) {
  std::vector<PosInt> kept;
  // Ascending order: a retained length can only be divided by a smaller one.
  for (PosInt a : set)
    if (std::none_of(kept.begin(), kept.end(), [a](PosInt b) { return a % b == 0; }))
      kept.push_back(a);
  return CycleSet(std::move(kept));
}

std::vector<std::size_t> componentOffsets(const CycleSet& set) {
  std::vector<std::size_t> out;
  std::size_t offset = 0;
  for (PosInt a : set) {
    out.push_back(offset);
    offset += a;
  }
  return out;
}

Digraph asDigraph(const CycleSet& set, const Limits& limits) {
  const PosInt n = set.vertexCount();
  if (n > limits.maxVertices) throw ResourceError("union of cycles vertex count", n, limits.maxVertices);
  Digraph g;
  g.vertexCount = n;
  g.edges.reserve(n);
  g.labels.reserve(n);
  std::size_t offset = 0;
  for (PosInt a : set) {
    for (PosInt k = 0; k < a; ++k) {
      g.edges.emplace_back(offset + k, offset + (k + 1) % a);
      g.labels.push_back(std::to_string(a) + ":" + std::to_string(k));
    }
    offset += a;
  }
  g.normalize();
  return g;
}

}  // namespace cyc
