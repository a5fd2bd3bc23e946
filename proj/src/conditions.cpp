#include "cyclattice/conditions.hpp"

#include <algorithm>
#include <map>

#include "cyclattice/errors.hpp"

namespace cyc {

PrimeSet::PrimeSet(std::initializer_list<PosInt> primes)
    : PrimeSet(std::vector<PosInt>(primes)) {}

PrimeSet::PrimeSet(std::vector<PosInt> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw DomainError("prime set must be nonempty");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (PosInt p : primes_)
    if (!isPrime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

bool PrimeSet::isSubsetOf(const PrimeSet& other) const noexcept {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

bool isTrivial(const Condition& s) noexcept { return s.carrier.contains(1); }

bool implies(const Condition& s, const Condition& t) {
  if (isTrivial(t)) return true;
  if (isTrivial(s)) return false;
  // b | a^k for some k  <=>  rad(b) | a.
  std::vector<PosInt> radicals;
  for (PosInt b : t.carrier) radicals.push_back(rad(b));
  return std::all_of(s.carrier.begin(), s.carrier.end(), [&](PosInt a) {
    return std::any_of(radicals.begin(), radicals.end(), [a](PosInt r) { return a % r == 0; });
  });
}

bool equivalent(const Condition& s, const Condition& t) { return implies(s, t) && implies(t, s); }

std::optional<PrimeCondition> setImpliesCounterexample(std::span<const Condition> gamma,
                                                       const Condition& t) {
  if (gamma.empty()) throw DomainError("set implication needs a nonempty premise set");
  if (isTrivial(t)) return std::nullopt;
  for (const auto& q : decompose(t)) {
    const Condition target = q.asCondition();
    const bool covered = std::any_of(gamma.begin(), gamma.end(),
                                     [&](const Condition& s) { return implies(s, target); });
    if (!covered) return q;
  }
  return std::nullopt;
}

bool setImplies(std::span<const Condition> gamma, const Condition& t) {
  return !setImpliesCounterexample(gamma, t).has_value();
}

namespace {

// c is maximal iff 1 is not in C./.c and dividing further by any prime p of
// lcm(C./.c) produces 1. (C./.c)./.p = C./.(c*p), so checking primes suffices.
bool isMaximal(const CycleSet& image) {
  if (image.contains(1)) return false;
  for (PosInt p : primeDivisors(image.lcm()))
    if (!dotdiv(image, p).contains(1)) return false;
  return true;
}

}  // namespace

bool isMaximalFullCheck(const CycleSet& set, PosInt c, const Limits& limits) {
  const CycleSet image = dotdiv(set, c);
  if (image.contains(1)) return false;
  for (PosInt d : divisors(image.lcm(), limits)) {
    if (d == 1) continue;
    if (!dotdiv(set, checkedMul(c, d)).contains(1)) return false;
  }
  return true;
}

std::vector<PosInt> maximalCs(const CycleSet& set, const Limits& limits) {
  std::map<CycleSet, PosInt> byImage;
  for (PosInt c : divisors(set.lcm(), limits)) {
    CycleSet image = dotdiv(set, c);
    if (isMaximal(image)) byImage.try_emplace(std::move(image), c);
  }
  std::vector<PosInt> out;
  for (const auto& entry : byImage) out.push_back(entry.second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeSet> maximalPrimeImages(const CycleSet& set, const Limits& limits) {
  std::vector<PrimeSet> out;
  for (PosInt c : maximalCs(set, limits)) {
    std::vector<PosInt> primes;
    for (PosInt a : dotdiv(set, c))
      if (isPrime(a)) primes.push_back(a);
    out.emplace_back(std::move(primes));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimeSet> minimalSets(std::vector<PrimeSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<PrimeSet> out;
  for (const auto& p : family) {
    const bool dominated = std::any_of(family.begin(), family.end(), [&](const PrimeSet& q) {
      return q != p && q.isSubsetOf(p);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<PrimeSet> maximalSets(std::vector<PrimeSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<PrimeSet> out;
  for (const auto& p : family) {
    const bool dominated = std::any_of(family.begin(), family.end(), [&](const PrimeSet& q) {
      return q != p && p.isSubsetOf(q);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<PrimeCondition> decompose(const Condition& s, const Limits& limits) {
  if (isTrivial(s)) throw DomainError("a trivial condition has no prime decomposition");
  std::vector<PrimeCondition> out;
  for (auto& p : minimalSets(maximalPrimeImages(s.carrier, limits))) out.push_back({std::move(p)});
  return out;
}

bool primeImplies(const PrimeCondition& p, const PrimeCondition& q) noexcept {
  return p.primes.isSubsetOf(q.primes);
}

std::optional<unsigned> bulletWitnessBound(const CycleSet& c, const CycleSet& d) {
  if (!implies(Condition{c}, Condition{d})) return std::nullopt;
  unsigned exponent = 1;
  for (PosInt b : d) exponent = std::max(exponent, maxPrimeExponent(b));
  const unsigned bound = static_cast<unsigned>(c.size()) * exponent;
  const CycleSet base = reduceByDivisibility(c);
  CycleSet power = base;
  for (unsigned k = 1; k <= bound; ++k) {
    if (k > 1) power = reduceByDivisibility(bulletProduct(power, base));
    if (homMaps(power, d)) return k;
  }
  // Unreachable when the implication holds; kept as a hard failure.
  throw Error("bullet witness not found within " + std::to_string(bound));
}

CycleSet conditionRepresentative(std::span<const PrimeCondition> antichain) {
  if (antichain.empty()) return CycleSet{1};
  CycleSet out = antichain.front().primes.asCycleSet();
  for (std::size_t i = 1; i < antichain.size(); ++i)
    out = reduceByDivisibility(rad(bulletProduct(out, antichain[i].primes.asCycleSet())));
  return reduceByDivisibility(out);
}

}  // namespace cyc
