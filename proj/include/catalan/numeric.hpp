#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace catalan {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Floor division for signed operands (rounds toward negative infinity).
constexpr std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of a modulo m in [0, m).
constexpr std::int64_t modPos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool isPrime(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> primeFactors(std::uint64_t n);

/// Operands are assumed reduced and m < 2^32.
inline std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a * b) % m;
}

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Order of a in (Z/mZ)^x; a must be coprime to m.
std::uint64_t multiplicativeOrder(std::uint64_t a, std::uint64_t m);

/// Smallest generator of (Z/pZ)^x for prime p.
std::uint64_t smallestPrimitiveRoot(std::uint64_t p);

/// Primes in [2, bound], ascending.
std::vector<std::uint64_t> primesUpTo(std::uint64_t bound);

BigInt binomial(unsigned n, unsigned k);

} // namespace catalan
