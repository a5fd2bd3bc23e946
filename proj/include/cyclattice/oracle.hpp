#pragma once

// Brute-force constructions on explicit digraphs. Nothing here calls into
// the conditions or poset modules; it exists to check them.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cyclattice/cycle_set.hpp"
#include "cyclattice/conditions.hpp"
#include "cyclattice/digraph.hpp"
#include "cyclattice/limits.hpp"
#include "cyclattice/poset.hpp"

namespace cyc::oracle {

/// Vertices of base^exponent are functions from the vertices of `exponent`
/// to the vertices of `base` (both numbered as in asDigraph), encoded
/// big-endian in radix |base|: coordinate 0 is the most significant digit.
std::size_t tupleIndex(const CycleSet& base, const CycleSet& exponent,
                       std::span<const std::size_t> coordinates);
std::vector<std::size_t> tupleCoordinates(const CycleSet& base, const CycleSet& exponent,
                                          std::size_t index);

/// base^exponent with the componentwise successor t -> t+1.
Digraph powerDigraph(const CycleSet& base, const CycleSet& exponent, const Limits& limits = {});

struct OrbitQuotient {
  Digraph base;
  std::vector<std::size_t> orbitOf;
  Digraph quotient;
};

/// Orbits of the coordinate shift σ_D acting on C^D, with quotient edges
/// orbit(t) -> orbit(t+1).
OrbitQuotient shiftQuotient(const CycleSet& structure, const CycleSet& condition,
                            const Limits& limits = {});

/// Distinct cycle lengths of the shift quotient, computed without
/// materializing edge lists.
std::vector<std::uint64_t> quotientCycleLengths(const CycleSet& structure, const CycleSet& condition,
                                                const Limits& limits = {});

/// Pol(C) |= Σ_D iff every shift-quotient cycle maps to C, i.e. each cycle
/// length is a multiple of some a in C.
bool oracleSatisfies(const CycleSet& structure, const Condition& condition, const Limits& limits = {});

/// The tuple t_(b,k) = (h(b), c*k) with c = lcm{h(b) ./. b}, as coordinates.
std::vector<std::size_t> witnessTuple(const CycleSet& structure, const CycleSet& condition,
                                      const CycleMap& h);

/// Length of the quotient cycle through the orbit of vertex `tuple`.
std::uint64_t quotientCycleLengthAt(const OrbitQuotient& q, std::size_t tuple);

/// Lexicographically least homomorphism from g to h under the fixed vertex
/// orders, by backtracking with forward checking. Guards: |g| and |h| bounds.
std::optional<std::vector<std::size_t>> findHomomorphism(const Digraph& g, const Digraph& h,
                                                         const Limits& limits = {});

/// Same vertices as asDigraph(C), edges u -> u + step.
Digraph relationalPower(const CycleSet& set, PosInt step, const Limits& limits = {});

/// Polymorphisms f: B^C -> B of the union of cycles B, with edges
/// f -> f∘σ_C. Guards: |B|^|C| <= 20 and |B|^(|B|^|C|) <= 2^20.
Digraph freeStructure(const CycleSet& b, const CycleSet& c);

/// Cycle lengths of g after deleting isolated vertices. Throws DomainError
/// if what remains is not a disjoint union of cycles.
CycleSet cycleSetOf(const Digraph& g);

/// g (minus isolated points) and the union of cycles `set` map to each other.
bool homEquivalentUnions(const Digraph& g, const CycleSet& set);

}  // namespace cyc::oracle
