#pragma once

// A finite nonempty set of cycle lengths. The same value stands for the
// disjoint union of directed cycles with those lengths and for the cyclic
// loop condition whose identity graph is that union.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclattice/arith.hpp"
#include "cyclattice/digraph.hpp"
#include "cyclattice/limits.hpp"

namespace cyc {

class CycleSet {
 public:
  /// Sorts and deduplicates; throws DomainError on empty input or a zero.
  CycleSet(std::initializer_list<PosInt> lengths);
  explicit CycleSet(std::vector<PosInt> lengths);

  std::span<const PosInt> lengths() const noexcept { return lengths_; }
  std::size_t size() const noexcept { return lengths_.size(); }
  PosInt min() const noexcept { return lengths_.front(); }
  PosInt max() const noexcept { return lengths_.back(); }
  bool contains(PosInt a) const noexcept;

  auto begin() const noexcept { return lengths_.begin(); }
  auto end() const noexcept { return lengths_.end(); }

  /// lcm of all lengths (checked).
  PosInt lcm() const;
  /// Sum of lengths = vertex count of the union of cycles (checked).
  PosInt vertexCount() const;

  /// Renders as "{a,b,...}".
  std::string str() const;

  friend bool operator==(const CycleSet&, const CycleSet&) = default;
  friend auto operator<=>(const CycleSet&, const CycleSet&) = default;

 private:
  std::vector<PosInt> lengths_;
};

/// {a ./. c | a in C}
CycleSet dotdiv(const CycleSet& set, PosInt c);
/// {rad(a) | a in C}
CycleSet rad(const CycleSet& set);
/// Lengths of the categorical product: pairwise lcm.
CycleSet timesProduct(const CycleSet& lhs, const CycleSet& rhs);
/// Lengths of the bullet product: pairwise products.
CycleSet bulletProduct(const CycleSet& lhs, const CycleSet& rhs);
/// k-fold bullet power, reduced by divisibility after every factor.
CycleSet bulletPower(const CycleSet& set, unsigned k);

/// True iff the union of cycles `from` maps homomorphically to `to`, i.e.
/// every length in `from` is a multiple of some length in `to`.
bool homMaps(const CycleSet& from, const CycleSet& to) noexcept;

/// Drops every length that is a multiple of another retained length. The
/// result is the smallest subset homomorphically equivalent to the input.
CycleSet reduceByDivisibility(const CycleSet& set);

/// The union of cycles as an explicit digraph. Vertex (a, k) is numbered by
/// the running offset of a plus k; labels are "a:k".
Digraph asDigraph(const CycleSet& set, const Limits& limits = {});

/// Index of vertex (a, k) in asDigraph numbering.
std::vector<std::size_t> componentOffsets(const CycleSet& set);

}  // namespace cyc
