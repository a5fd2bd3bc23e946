#pragma once

// Cyclic loop conditions: implication, equivalence and decomposition into
// prime cyclic loop conditions.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclattice/cycle_set.hpp"
#include "cyclattice/limits.hpp"

namespace cyc {

/// Nonempty set of distinct primes, sorted.
class PrimeSet {
 public:
  PrimeSet(std::initializer_list<PosInt> primes);
  /// Throws DomainError when empty or when an element is not prime.
  explicit PrimeSet(std::vector<PosInt> primes);

  std::span<const PosInt> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  bool isSubsetOf(const PrimeSet& other) const noexcept;
  CycleSet asCycleSet() const { return CycleSet(primes_); }
  std::string str() const { return asCycleSet().str(); }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<PosInt> primes_;
};

/// The cyclic loop condition whose identity graph is the union of cycles
/// `carrier`.
struct Condition {
  CycleSet carrier;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct PrimeCondition {
  PrimeSet primes;

  Condition asCondition() const { return Condition{primes.asCycleSet()}; }
  friend bool operator==(const PrimeCondition&, const PrimeCondition&) = default;
  friend auto operator<=>(const PrimeCondition&, const PrimeCondition&) = default;
};

/// Trivial iff the identity graph has a loop.
bool isTrivial(const Condition& s) noexcept;

/// s => t: every a in the carrier of s has some b in the carrier of t whose
/// prime divisors all divide a. Trivial t is implied by anything.
bool implies(const Condition& s, const Condition& t);

bool equivalent(const Condition& s, const Condition& t);

/// Gamma => t, decided member-wise on the prime decomposition of t.
/// Throws DomainError when gamma is empty.
bool setImplies(std::span<const Condition> gamma, const Condition& t);

/// First prime condition of decompose(t) implied by no member of gamma.
std::optional<PrimeCondition> setImpliesCounterexample(std::span<const Condition> gamma,
                                                       const Condition& t);

/// Least representative c for every distinct image C ./. c with c maximal
/// for C. Candidates range over the divisors of lcm(C). Empty when 1 in C.
std::vector<PosInt> maximalCs(const CycleSet& set, const Limits& limits = {});

/// The defining check for "c is maximal for C", quantifying over every
/// divisor d > 1 of lcm(C ./. c). Reference for the prime-only shortcut.
bool isMaximalFullCheck(const CycleSet& set, PosInt c, const Limits& limits = {});

/// Prime elements of C ./. c for every maximal c, deduplicated and sorted.
std::vector<PrimeSet> maximalPrimeImages(const CycleSet& set, const Limits& limits = {});

/// ⊆-minimal members of maximalPrimeImages: an antichain of prime conditions
/// equivalent to s. Throws DomainError for a trivial condition.
std::vector<PrimeCondition> decompose(const Condition& s, const Limits& limits = {});

/// Σ_P => Σ_Q iff P ⊆ Q.
bool primeImplies(const PrimeCondition& p, const PrimeCondition& q) noexcept;

/// Smallest k with C^{•k} -> D when Σ_C => Σ_D, searched up to
/// |C| * (largest prime exponent in D); absent otherwise.
std::optional<unsigned> bulletWitnessBound(const CycleSet& c, const CycleSet& d);

/// Square-free representative of an antichain of prime conditions: the
/// reduced radical of their bullet product. {1} for an empty antichain.
CycleSet conditionRepresentative(std::span<const PrimeCondition> antichain);

/// ⊆-minimal / ⊆-maximal members of a family of prime sets, sorted.
std::vector<PrimeSet> minimalSets(std::vector<PrimeSet> family);
std::vector<PrimeSet> maximalSets(std::vector<PrimeSet> family);

}  // namespace cyc
