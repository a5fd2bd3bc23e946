#include "cyclattice/arith.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cyclattice/errors.hpp"

namespace cyc {

namespace {

void requirePositive(PosInt a, const char* op) {
  if (a == 0) throw DomainError(std::string(op) + ": argument must be positive");
}

}  // namespace

PosInt gcd(PosInt a, PosInt b) noexcept {
  while (b != 0) {
    PosInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

PosInt checkedMul(PosInt a, PosInt b) {
  PosInt out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

PosInt lcm(PosInt a, PosInt b) {
  requirePositive(a, "lcm");
  requirePositive(b, "lcm");
  return checkedMul(a / gcd(a, b), b);
}

PosInt checkedPow(PosInt base, unsigned exponent) {
  PosInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checkedMul(out, base);
  return out;
}

PosInt dotdiv(PosInt a, PosInt c) noexcept { return a / gcd(a, c); }

std::vector<PrimePower> factorize(PosInt a) {
  requirePositive(a, "factorize");
  std::vector<PrimePower> out;
  for (PosInt p = 2; p <= a / p; p += (p == 2 ? 1 : 2)) {
    if (a % p != 0) continue;
    unsigned e = 0;
    while (a % p == 0) {
      a /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (a > 1) out.push_back({a, 1});
  return out;
}

std::vector<PosInt> primeDivisors(PosInt a) {
  std::vector<PosInt> out;
  for (const auto& pp : factorize(a)) out.push_back(pp.prime);
  return out;
}

PosInt rad(PosInt a) {
  PosInt out = 1;
  for (const auto& pp : factorize(a)) out *= pp.prime;
  return out;
}

bool isPrime(PosInt a) noexcept {
  if (a < 2) return false;
  if (a % 2 == 0) return a == 2;
  for (PosInt d = 3; d <= a / d; d += 2)
    if (a % d == 0) return false;
  return true;
}

unsigned maxPrimeExponent(PosInt a) {
  unsigned best = 0;
  for (const auto& pp : factorize(a)) best = std::max(best, pp.exponent);
  return best;
}

std::vector<PosInt> divisors(PosInt a, const Limits& limits) {
  const auto factors = factorize(a);
  std::uint64_t count = 1;
  for (const auto& pp : factors) {
    count *= pp.exponent + 1;
    if (count > limits.maxDivisors)
      throw ResourceError("divisor count of " + std::to_string(a), count, limits.maxDivisors);
  }
  std::vector<PosInt> out{1};
  out.reserve(count);
  for (const auto& pp : factors) {
    const std::size_t base = out.size();
    PosInt power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyc
