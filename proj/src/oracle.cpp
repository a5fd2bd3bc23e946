#include "cyclattice/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "cyclattice/errors.hpp"

namespace cyc::oracle {

namespace {

std::vector<std::size_t> successorOf(const CycleSet& set) {
  std::vector<std::size_t> succ;
  std::size_t offset = 0;
  for (PosInt a : set) {
    for (PosInt k = 0; k < a; ++k) succ.push_back(offset + (k + 1) % a);
    offset += a;
  }
  return succ;
}

// Shape of base^exponent: radix |base|, width |exponent|.
struct PowerShape {
  std::size_t radix;
  std::size_t width;
  std::size_t size;
  std::vector<std::size_t> place;  // place[j] = radix^(width-1-j)

  PowerShape(const CycleSet& base, const CycleSet& exponent, std::uint64_t bound) {
    radix = base.vertexCount();
    width = exponent.vertexCount();
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < width; ++j)
      if (__builtin_mul_overflow(total, radix, &total) || total > bound)
        throw ResourceError("power vertex count", total, bound);
    size = total;
    place.assign(width, 1);
    for (std::size_t j = width; j-- > 1;) place[j - 1] = place[j] * radix;
  }

  void decode(std::size_t index, std::vector<std::size_t>& digits) const {
    for (std::size_t j = width; j-- > 0;) {
      digits[j] = index % radix;
      index /= radix;
    }
  }
};

}  // namespace

std::size_t tupleIndex(const CycleSet& base, const CycleSet& exponent,
                       std::span<const std::size_t> coordinates) {
  const std::size_t radix = base.vertexCount();
  if (coordinates.size() != exponent.vertexCount()) throw DomainError("tuple width mismatch");
  std::size_t index = 0;
  for (std::size_t x : coordinates) {
    if (x >= radix) throw DomainError("tuple coordinate out of range");
    index = index * radix + x;
  }
  return index;
}

std::vector<std::size_t> tupleCoordinates(const CycleSet& base, const CycleSet& exponent,
                                          std::size_t index) {
  const std::size_t radix = base.vertexCount();
  std::vector<std::size_t> out(exponent.vertexCount());
  for (std::size_t j = out.size(); j-- > 0;) {
    out[j] = index % radix;
    index /= radix;
  }
  return out;
}

Digraph powerDigraph(const CycleSet& base, const CycleSet& exponent, const Limits& limits) {
  const PowerShape shape(base, exponent, limits.maxVertices);
  const auto succ = successorOf(base);
  Digraph g;
  g.vertexCount = shape.size;
  g.edges.reserve(shape.size);
  std::vector<std::size_t> digits(shape.width);
  for (std::size_t t = 0; t < shape.size; ++t) {
    shape.decode(t, digits);
    std::size_t next = 0;
    for (std::size_t j = 0; j < shape.width; ++j) next += succ[digits[j]] * shape.place[j];
    g.edges.emplace_back(t, next);
  }
  g.normalize();
  return g;
}

namespace {

struct ShiftOrbits {
  std::vector<std::size_t> orbitOf;
  std::vector<std::size_t> quotientSucc;  // indexed by orbit
  std::vector<std::size_t> baseSucc;      // t -> t+1
};

ShiftOrbits computeShiftOrbits(const CycleSet& structure, const CycleSet& condition,
                               const Limits& limits, bool keepBaseSucc) {
  const PowerShape shape(structure, condition, limits.maxVertices);
  const auto succC = successorOf(structure);
  const auto succD = successorOf(condition);

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  ShiftOrbits out;
  out.orbitOf.assign(shape.size, unassigned);
  std::vector<std::size_t> digits(shape.width);
  std::size_t orbitCount = 0;

  // (t∘σ_D)_j = t_{σ_D(j)}
  auto shift = [&](std::size_t t) {
    shape.decode(t, digits);
    std::size_t next = 0;
    for (std::size_t j = 0; j < shape.width; ++j) next += digits[succD[j]] * shape.place[j];
    return next;
  };
  auto plusOne = [&](std::size_t t) {
    shape.decode(t, digits);
    std::size_t next = 0;
    for (std::size_t j = 0; j < shape.width; ++j) next += succC[digits[j]] * shape.place[j];
    return next;
  };

  for (std::size_t t = 0; t < shape.size; ++t) {
    if (out.orbitOf[t] != unassigned) continue;
    std::size_t v = t;
    do {
      out.orbitOf[v] = orbitCount;
      v = shift(v);
    } while (v != t);
    ++orbitCount;
  }

  out.quotientSucc.assign(orbitCount, unassigned);
  if (keepBaseSucc) out.baseSucc.resize(shape.size);
  for (std::size_t t = 0; t < shape.size; ++t) {
    const std::size_t o = out.orbitOf[t];
    if (out.quotientSucc[o] != unassigned && !keepBaseSucc) continue;
    const std::size_t next = plusOne(t);
    if (keepBaseSucc) out.baseSucc[t] = next;
    out.quotientSucc[o] = out.orbitOf[next];
  }
  return out;
}

}  // namespace

OrbitQuotient shiftQuotient(const CycleSet& structure, const CycleSet& condition, const Limits& limits) {
  ShiftOrbits orbits = computeShiftOrbits(structure, condition, limits, true);
  OrbitQuotient q;
  q.base.vertexCount = orbits.baseSucc.size();
  for (std::size_t t = 0; t < orbits.baseSucc.size(); ++t) q.base.edges.emplace_back(t, orbits.baseSucc[t]);
  q.base.normalize();
  q.quotient.vertexCount = orbits.quotientSucc.size();
  for (std::size_t o = 0; o < orbits.quotientSucc.size(); ++o)
    q.quotient.edges.emplace_back(o, orbits.quotientSucc[o]);
  q.quotient.normalize();
  q.orbitOf = std::move(orbits.orbitOf);
  return q;
}

std::vector<std::uint64_t> quotientCycleLengths(const CycleSet& structure, const CycleSet& condition,
                                                const Limits& limits) {
  const ShiftOrbits orbits = computeShiftOrbits(structure, condition, limits, false);
  auto lengths = cycleLengths(orbits.quotientSucc);
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

bool oracleSatisfies(const CycleSet& structure, const Condition& condition, const Limits& limits) {
  for (std::uint64_t len : quotientCycleLengths(structure, condition.carrier, limits)) {
    const bool maps = std::any_of(structure.begin(), structure.end(), [len](PosInt a) { return len % a == 0; });
    if (!maps) return false;
  }
  return true;
}

std::vector<std::size_t> witnessTuple(const CycleSet& structure, const CycleSet& condition,
                                      const CycleMap& h) {
  if (h.size() != condition.size()) throw DomainError("map must be defined on every length of D");
  PosInt period = 1;
  for (const auto& [b, a] : h) period = lcm(period, dotdiv(a, b));
  const auto lengths = structure.lengths();
  const auto offsets = componentOffsets(structure);
  std::vector<std::size_t> out;
  for (const auto& [b, a] : h) {
    const auto it = std::find(lengths.begin(), lengths.end(), a);
    if (it == lengths.end()) throw DomainError("map target is not a length of C");
    const std::size_t offset = offsets[static_cast<std::size_t>(it - lengths.begin())];
    for (PosInt k = 0; k < b; ++k) out.push_back(offset + (period % a) * (k % a) % a);
  }
  return out;
}

std::uint64_t quotientCycleLengthAt(const OrbitQuotient& q, std::size_t tuple) {
  std::vector<std::size_t> succ(q.quotient.vertexCount);
  for (const auto& [u, v] : q.quotient.edges) succ[u] = v;
  const std::size_t start = q.orbitOf.at(tuple);
  std::uint64_t len = 0;
  std::size_t v = start;
  do {
    v = succ[v];
    ++len;
  } while (v != start);
  return len;
}

std::optional<std::vector<std::size_t>> findHomomorphism(const Digraph& g, const Digraph& h,
                                                         const Limits& limits) {
  if (g.vertexCount > limits.maxSearchSource)
    throw ResourceError("homomorphism source size", g.vertexCount, limits.maxSearchSource);
  if (h.vertexCount > std::min<std::uint64_t>(limits.maxSearchTarget, 64))
    throw ResourceError("homomorphism target size", h.vertexCount, std::min<std::uint64_t>(limits.maxSearchTarget, 64));
  const std::size_t n = g.vertexCount;
  const std::size_t m = h.vertexCount;
  if (n == 0) return std::vector<std::size_t>{};
  if (m == 0) return std::nullopt;

  // Bitset adjacency of the target.
  std::vector<std::uint64_t> outMask(m, 0), inMask(m, 0);
  for (const auto& [u, v] : h.edges) {
    outMask[u] |= std::uint64_t{1} << v;
    inMask[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::uint64_t loops = 0;
  for (std::size_t x = 0; x < m; ++x)
    if (outMask[x] & (std::uint64_t{1} << x)) loops |= std::uint64_t{1} << x;

  std::vector<std::vector<std::size_t>> outAdj(n), inAdj(n);
  std::vector<bool> selfLoop(n, false);
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      selfLoop[u] = true;
      continue;
    }
    outAdj[u].push_back(v);
    inAdj[v].push_back(u);
  }

  // Candidates for vertex v given assignments of vertices < v.
  std::vector<std::size_t> assign(n, 0);
  auto candidates = [&](std::size_t v) {
    std::uint64_t mask = selfLoop[v] ? loops : all;
    for (std::size_t u : inAdj[v])
      if (u < v) mask &= outMask[assign[u]];
    for (std::size_t w : outAdj[v])
      if (w < v) mask &= inMask[assign[w]];
    return mask;
  };

  std::vector<std::uint64_t> remaining(n, 0);
  std::size_t depth = 0;
  remaining[0] = candidates(0);
  while (true) {
    if (remaining[depth] == 0) {
      if (depth == 0) return std::nullopt;
      --depth;
      continue;
    }
    const unsigned pick = static_cast<unsigned>(std::countr_zero(remaining[depth]));
    remaining[depth] &= remaining[depth] - 1;
    assign[depth] = pick;
    if (depth + 1 == n) return assign;
    ++depth;
    remaining[depth] = candidates(depth);
  }
}

Digraph relationalPower(const CycleSet& set, PosInt step, const Limits& limits) {
  Digraph g = asDigraph(set, limits);
  g.edges.clear();
  std::size_t offset = 0;
  for (PosInt a : set) {
    for (PosInt k = 0; k < a; ++k) g.edges.emplace_back(offset + k, offset + (k + step % a) % a);
    offset += a;
  }
  g.normalize();
  return g;
}

Digraph freeStructure(const CycleSet& b, const CycleSet& c) {
  constexpr std::uint64_t maxTuples = 20;
  constexpr std::uint64_t maxMaps = std::uint64_t{1} << 20;
  const PowerShape shape(b, c, maxTuples);
  const std::size_t nb = shape.radix;
  const std::size_t tuples = shape.size;
  std::uint64_t mapCount = 1;
  for (std::size_t i = 0; i < tuples; ++i)
    if (__builtin_mul_overflow(mapCount, nb, &mapCount) || mapCount > maxMaps)
      throw ResourceError("candidate map count", mapCount, maxMaps);

  const auto succB = successorOf(b);
  const auto succC = successorOf(c);
  std::vector<std::size_t> next(tuples), shifted(tuples), digits(shape.width);
  for (std::size_t t = 0; t < tuples; ++t) {
    shape.decode(t, digits);
    std::size_t n = 0, s = 0;
    for (std::size_t j = 0; j < shape.width; ++j) {
      n += succB[digits[j]] * shape.place[j];
      s += digits[succC[j]] * shape.place[j];
    }
    next[t] = n;
    shifted[t] = s;
  }

  // f is stored as its value table; code = sum f(t) * nb^t.
  std::vector<std::size_t> table(tuples);
  std::vector<std::uint64_t> polymorphisms;
  std::vector<std::uint64_t> power(tuples, 1);
  for (std::size_t t = 1; t < tuples; ++t) power[t] = power[t - 1] * nb;
  for (std::uint64_t code = 0; code < mapCount; ++code) {
    std::uint64_t rest = code;
    for (std::size_t t = 0; t < tuples; ++t) {
      table[t] = rest % nb;
      rest /= nb;
    }
    bool preserves = true;
    for (std::size_t t = 0; t < tuples && preserves; ++t) preserves = succB[table[t]] == table[next[t]];
    if (preserves) polymorphisms.push_back(code);
  }

  Digraph g;
  g.vertexCount = polymorphisms.size();
  for (std::size_t i = 0; i < polymorphisms.size(); ++i) {
    std::uint64_t rest = polymorphisms[i];
    for (std::size_t t = 0; t < tuples; ++t) {
      table[t] = rest % nb;
      rest /= nb;
    }
    std::uint64_t image = 0;
    std::string label;
    for (std::size_t t = 0; t < tuples; ++t) {
      image += table[shifted[t]] * power[t];
      label += std::to_string(table[t]);
      if (t + 1 < tuples) label += ',';
    }
    const auto it = std::lower_bound(polymorphisms.begin(), polymorphisms.end(), image);
    g.edges.emplace_back(i, static_cast<std::size_t>(it - polymorphisms.begin()));
    g.labels.push_back(std::move(label));
  }
  g.normalize();
  return g;
}

CycleSet cycleSetOf(const Digraph& g) {
  const auto outDeg = g.outDegrees();
  const auto inDeg = g.inDegrees();
  std::vector<std::size_t> index(g.vertexCount, g.vertexCount);
  std::size_t kept = 0;
  for (std::size_t v = 0; v < g.vertexCount; ++v)
    if (outDeg[v] + inDeg[v] > 0) index[v] = kept++;
  Digraph core;
  core.vertexCount = kept;
  for (const auto& [u, v] : g.edges) core.edges.emplace_back(index[u], index[v]);
  core.normalize();
  if (kept == 0) throw DomainError("digraph has no cycles");
  const auto lengths = cycleLengths(core);
  return CycleSet(std::vector<PosInt>(lengths.begin(), lengths.end()));
}

bool homEquivalentUnions(const Digraph& g, const CycleSet& set) {
  const CycleSet lengths = cycleSetOf(g);
  return homMaps(lengths, set) && homMaps(set, lengths);
}

}  // namespace cyc::oracle
