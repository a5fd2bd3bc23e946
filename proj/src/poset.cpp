#include "cyclattice/poset.hpp"

#include <algorithm>
#include <numeric>

#include "cyclattice/errors.hpp"

namespace cyc {

NpcFingerprint::NpcFingerprint(std::vector<PrimeSet> family) : maximal_(cyc::maximalSets(std::move(family))) {}

bool NpcFingerprint::unsatisfied(const PrimeSet& p) const noexcept {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const PrimeSet& m) { return p.isSubsetOf(m); });
}

bool NpcFingerprint::covers(const NpcFingerprint& other) const noexcept {
  return std::all_of(other.maximal_.begin(), other.maximal_.end(),
                     [&](const PrimeSet& p) { return unsatisfied(p); });
}

std::string toString(CompareResult r) {
  switch (r) {
    case CompareResult::StrictlyBelow: return "<";
    case CompareResult::StrictlyAbove: return ">";
    case CompareResult::Equivalent: return "=";
    case CompareResult::Incomparable: return "||";
  }
  return "?";
}

std::optional<CycleMap> unsatisfyingMap(const CycleSet& structure, const Condition& condition,
                                        const Limits& limits) {
  const auto lengths = structure.lengths();
  const auto domain = condition.carrier.lengths();
  const std::size_t n = lengths.size();
  const std::size_t m = domain.size();

  std::uint64_t mapCount = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (__builtin_mul_overflow(mapCount, n, &mapCount) || mapCount > limits.maxMaps)
      throw ResourceError("number of maps D -> C", mapCount, limits.maxMaps);
  }

  std::vector<std::size_t> choice(m, 0);
  while (true) {
    PosInt period = 1;
    for (std::size_t i = 0; i < m; ++i) period = lcm(period, dotdiv(lengths[choice[i]], domain[i]));
    const bool ok = std::any_of(lengths.begin(), lengths.end(), [period](PosInt a) { return period % a == 0; });
    if (!ok) {
      CycleMap witness;
      for (std::size_t i = 0; i < m; ++i) witness.emplace_back(domain[i], lengths[choice[i]]);
      return witness;
    }
    // Odometer, last coordinate fastest.
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++choice[pos] < n) break;
      choice[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

bool satisfies(const CycleSet& structure, const Condition& condition, const Limits& limits) {
  return !unsatisfyingMap(structure, condition, limits).has_value();
}

NpcFingerprint npc(const CycleSet& structure, const Limits& limits) {
  return NpcFingerprint(maximalPrimeImages(structure, limits));
}

bool ppConstructs(const NpcFingerprint& b, const NpcFingerprint& c) noexcept { return b.covers(c); }

CompareResult compare(const NpcFingerprint& b, const NpcFingerprint& c) noexcept {
  const bool below = ppConstructs(b, c);
  const bool above = ppConstructs(c, b);
  if (below && above) return CompareResult::Equivalent;
  if (below) return CompareResult::StrictlyBelow;
  if (above) return CompareResult::StrictlyAbove;
  return CompareResult::Incomparable;
}

CompareResult compare(const CycleSet& b, const CycleSet& c, const Limits& limits) {
  return compare(npc(b, limits), npc(c, limits));
}

CycleSet realize(const NpcFingerprint& fingerprint, const Limits& limits) {
  const auto& sets = fingerprint.maximalSets();
  if (sets.empty()) return CycleSet{1};
  CycleSet out = sets.front().asCycleSet();
  for (std::size_t i = 1; i < sets.size(); ++i) {
    const std::uint64_t terms = out.size() * sets[i].size();
    if (terms > limits.maxProductTerms)
      throw ResourceError("times product term count", terms, limits.maxProductTerms);
    out = reduceByDivisibility(timesProduct(out, sets[i].asCycleSet()));
  }
  return reduceByDivisibility(out);
}

CycleSet canon(const CycleSet& structure, const Limits& limits) {
  return realize(npc(structure, limits), limits);
}

Condition condMeet(const Condition& s, const Condition& t) {
  std::vector<PosInt> all(s.carrier.begin(), s.carrier.end());
  all.insert(all.end(), t.carrier.begin(), t.carrier.end());
  return Condition{CycleSet(std::move(all))};
}

Condition condJoin(const Condition& s, const Condition& t) {
  return Condition{rad(bulletProduct(rad(s.carrier), rad(t.carrier)))};
}

NpcFingerprint fingerprintMeet(const NpcFingerprint& b, const NpcFingerprint& c) {
  std::vector<PrimeSet> all = b.maximalSets();
  all.insert(all.end(), c.maximalSets().begin(), c.maximalSets().end());
  return NpcFingerprint(std::move(all));
}

NpcFingerprint fingerprintJoin(const NpcFingerprint& b, const NpcFingerprint& c) {
  std::vector<PrimeSet> all;
  for (const auto& x : b.maximalSets()) {
    for (const auto& y : c.maximalSets()) {
      std::vector<PosInt> common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
      if (!common.empty()) all.emplace_back(std::move(common));
    }
  }
  return NpcFingerprint(std::move(all));
}

CycleSet ucMeet(const CycleSet& b, const CycleSet& c, const Limits& limits) {
  return realize(fingerprintMeet(npc(b, limits), npc(c, limits)), limits);
}

CycleSet ucJoin(const CycleSet& b, const CycleSet& c, const Limits& limits) {
  return realize(fingerprintJoin(npc(b, limits), npc(c, limits)), limits);
}

std::optional<std::size_t> HasseGraph::find(const std::string& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].label == label) return i;
  return std::nullopt;
}

bool hasseLeq(HasseKind kind, const HasseNode& lower, const HasseNode& upper) {
  if (kind == HasseKind::Unions) {
    // lower pp-constructs upper.
    return NpcFingerprint(lower.antichain).covers(NpcFingerprint(upper.antichain));
  }
  // upper => lower: each prime condition of lower is implied by one of upper.
  return std::all_of(lower.antichain.begin(), lower.antichain.end(), [&](const PrimeSet& p) {
    return std::any_of(upper.antichain.begin(), upper.antichain.end(),
                       [&](const PrimeSet& q) { return q.isSubsetOf(p); });
  });
}

std::vector<std::pair<std::size_t, std::size_t>> coverEdges(
    const std::vector<std::vector<bool>>& strictlyBelow) {
  const std::size_t n = strictlyBelow.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strictlyBelow[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = strictlyBelow[i][k] && strictlyBelow[k][j];
      if (!between) out.emplace_back(i, j);
    }
  }
  return out;
}

namespace {

std::string unionLabel(const CycleSet& c) { return "C" + c.str(); }

std::string conditionLabel(const std::vector<PrimeSet>& antichain) {
  if (antichain.empty()) return "S{1}";
  std::string out;
  for (std::size_t i = 0; i < antichain.size(); ++i) {
    if (i) out += '+';
    out += "S" + antichain[i].str();
  }
  return out;
}

}  // namespace

HasseGraph enumerateHasse(const PrimeSet& primes, HasseKind kind, const Limits& limits) {
  const std::size_t n = primes.size();
  if (n > 4) throw ResourceError("prime count for Hasse enumeration", n, 4);

  const unsigned subsetCount = (1u << n) - 1;  // nonempty subsets, as masks 1..2^n-1
  auto subsetOf = [&](unsigned mask) {
    std::vector<PosInt> out;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) out.push_back(primes.primes()[i]);
    return PrimeSet(std::move(out));
  };

  HasseGraph graph;
  graph.kind = kind;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsetCount); ++family) {
    std::vector<unsigned> members;
    for (unsigned s = 0; s < subsetCount; ++s)
      if (family & (std::uint64_t{1} << s)) members.push_back(s + 1);
    bool antichain = true;
    for (unsigned x : members)
      for (unsigned y : members)
        if (x != y && (x & y) == x) antichain = false;
    if (!antichain) continue;

    HasseNode node;
    for (unsigned x : members) node.antichain.push_back(subsetOf(x));
    std::sort(node.antichain.begin(), node.antichain.end());
    if (kind == HasseKind::Unions) {
      node.representative = realize(NpcFingerprint(node.antichain), limits);
      node.label = unionLabel(node.representative);
    } else {
      std::vector<PrimeCondition> decomposition;
      for (const auto& p : node.antichain) decomposition.push_back({p});
      node.representative = conditionRepresentative(decomposition);
      node.label = conditionLabel(node.antichain);
    }
    graph.nodes.push_back(std::move(node));
  }

  std::sort(graph.nodes.begin(), graph.nodes.end(), [](const HasseNode& a, const HasseNode& b) {
    return std::tie(a.representative, a.label) < std::tie(b.representative, b.label);
  });

  const std::size_t count = graph.nodes.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      below[i][j] = i != j && hasseLeq(kind, graph.nodes[i], graph.nodes[j]);
  graph.covers = coverEdges(below);
  return graph;
}

}  // namespace cyc
