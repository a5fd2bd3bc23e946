#pragma once

// Exact 64-bit arithmetic on positive integers. Every operation that can
// overflow is checked and throws OverflowError instead of wrapping.

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclattice/limits.hpp"

namespace cyc {

using PosInt = std::uint64_t;

struct PrimePower {
  PosInt prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

PosInt gcd(PosInt a, PosInt b) noexcept;

/// Throws OverflowError when the product does not fit.
PosInt checkedMul(PosInt a, PosInt b);
PosInt lcm(PosInt a, PosInt b);
PosInt checkedPow(PosInt base, unsigned exponent);

/// "Divide as much as you can": a / gcd(a, c).
PosInt dotdiv(PosInt a, PosInt c) noexcept;

/// Sorted prime factorization by trial division; empty for 1.
std::vector<PrimePower> factorize(PosInt a);

/// Distinct prime divisors of a, ascending.
std::vector<PosInt> primeDivisors(PosInt a);

/// Product of the distinct prime divisors; rad(1) = 1.
PosInt rad(PosInt a);

bool isPrime(PosInt a) noexcept;

/// Largest exponent in the factorization of a (0 for a = 1).
unsigned maxPrimeExponent(PosInt a);

/// All positive divisors of a, ascending. Throws ResourceError when the
/// divisor count exceeds limits.maxDivisors.
std::vector<PosInt> divisors(PosInt a, const Limits& limits = {});

}  // namespace cyc
