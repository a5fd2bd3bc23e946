#pragma once

// The pp-constructability order on finite disjoint unions of cycles, seen
// through the prime cyclic loop conditions their polymorphisms fail.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclattice/conditions.hpp"
#include "cyclattice/cycle_set.hpp"
#include "cyclattice/limits.hpp"

namespace cyc {

/// The finite set of prime conditions NOT satisfied by Pol(C), stored as the
/// antichain of its ⊆-maximal members. Empty means every prime condition
/// holds (the type of the loop).
class NpcFingerprint {
 public:
  NpcFingerprint() = default;
  /// Keeps only the ⊆-maximal members.
  explicit NpcFingerprint(std::vector<PrimeSet> family);

  const std::vector<PrimeSet>& maximalSets() const noexcept { return maximal_; }
  bool empty() const noexcept { return maximal_.empty(); }

  /// Σ_P is unsatisfied iff P lies below some maximal set.
  bool unsatisfied(const PrimeSet& p) const noexcept;
  /// Every member of `other` lies below some member of *this.
  bool covers(const NpcFingerprint& other) const noexcept;

  friend bool operator==(const NpcFingerprint&, const NpcFingerprint&) = default;
  friend auto operator<=>(const NpcFingerprint&, const NpcFingerprint&) = default;

 private:
  std::vector<PrimeSet> maximal_;
};

enum class CompareResult { StrictlyBelow, StrictlyAbove, Equivalent, Incomparable };

std::string toString(CompareResult r);

/// A map h: D -> C, as (b, h(b)) pairs in ascending order of b.
using CycleMap = std::vector<std::pair<PosInt, PosInt>>;

/// Pol(C) |= Σ_D iff for every h: D -> C some a in C divides
/// lcm{h(b) ./. b}. Enumerates all |C|^|D| maps (guarded by limits.maxMaps).
bool satisfies(const CycleSet& structure, const Condition& condition, const Limits& limits = {});

/// The first map h (in lexicographic order) violating the criterion above.
std::optional<CycleMap> unsatisfyingMap(const CycleSet& structure, const Condition& condition,
                                        const Limits& limits = {});

NpcFingerprint npc(const CycleSet& structure, const Limits& limits = {});

/// B ≤ C iff B pp-constructs C iff every maximal set of npc(C) lies below a
/// maximal set of npc(B).
bool ppConstructs(const NpcFingerprint& b, const NpcFingerprint& c) noexcept;
CompareResult compare(const NpcFingerprint& b, const NpcFingerprint& c) noexcept;
CompareResult compare(const CycleSet& b, const CycleSet& c, const Limits& limits = {});

/// A union of cycles whose unsatisfied prime conditions are exactly the
/// downward closure of `fingerprint`: the reduced times product of the
/// maximal sets, {1} when empty.
CycleSet realize(const NpcFingerprint& fingerprint, const Limits& limits = {});

/// Square-free canonical representative of the pp-type of C.
CycleSet canon(const CycleSet& structure, const Limits& limits = {});

/// Meet and join of condition classes (ordered by strength, stronger above).
Condition condMeet(const Condition& s, const Condition& t);
Condition condJoin(const Condition& s, const Condition& t);

/// Meet and join of pp-types; both return canonical representatives.
NpcFingerprint fingerprintMeet(const NpcFingerprint& b, const NpcFingerprint& c);
NpcFingerprint fingerprintJoin(const NpcFingerprint& b, const NpcFingerprint& c);
CycleSet ucMeet(const CycleSet& b, const CycleSet& c, const Limits& limits = {});
CycleSet ucJoin(const CycleSet& b, const CycleSet& c, const Limits& limits = {});

enum class HasseKind { Unions, Conditions };

struct HasseNode {
  /// Unions: maximal unsatisfied prime sets. Conditions: the decomposition
  /// (empty for the trivial class).
  std::vector<PrimeSet> antichain;
  /// Unions: realize(). Conditions: conditionRepresentative().
  CycleSet representative{1};
  /// "C{...}" for unions; "S{..}+S{..}" decomposition for conditions.
  std::string label;
};

struct HasseGraph {
  HasseKind kind = HasseKind::Unions;
  std::vector<HasseNode> nodes;
  /// Cover relation: (lower, upper) node indices, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::optional<std::size_t> find(const std::string& label) const;
};

/// Every pp-type (or condition class) expressible with the given primes.
/// At most 4 primes.
HasseGraph enumerateHasse(const PrimeSet& primes, HasseKind kind, const Limits& limits = {});

/// Order used by enumerateHasse: lower ≤ upper.
bool hasseLeq(HasseKind kind, const HasseNode& lower, const HasseNode& upper);

/// Transitive reduction of a strict order given as an n x n relation.
std::vector<std::pair<std::size_t, std::size_t>> coverEdges(
    const std::vector<std::vector<bool>>& strictlyBelow);

}  // namespace cyc
