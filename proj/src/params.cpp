#include "catalan/params.hpp"

#include <numeric>
#include <string>

#include "catalan/errors.hpp"
#include "catalan/numeric.hpp"

namespace catalan {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::uint64_t> primeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulMod(result, base, m);
    base = mulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicativeOrder(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a % m, m) != 1)
    throw ValidationError("multiplicativeOrder: element not invertible");
  std::uint64_t x = a % m;
  std::uint64_t order = 1;
  while (x != 1 % m) {
    x = mulMod(x, a % m, m);
    ++order;
  }
  return order;
}

std::uint64_t smallestPrimitiveRoot(std::uint64_t p) {
  if (!isPrime(p)) throw ValidationError("smallestPrimitiveRoot: modulus is not prime");
  if (p == 2) return 1;
  const auto factors = primeFactors(p - 1);
  for (std::uint64_t r = 2; r < p; ++r) {
    bool generator = true;
    for (auto f : factors)
      if (powMod(r, (p - 1) / f, p) == 1) {
        generator = false;
        break;
      }
    if (generator) return r;
  }
  throw ComputationError("smallestPrimitiveRoot: no generator found");
}

std::vector<std::uint64_t> primesUpTo(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  BigInt r = 1;
  for (unsigned j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

namespace {

void requireOddPrimePair(int p, int q) {
  auto oddPrime = [](int n) { return n > 2 && isPrime(static_cast<std::uint64_t>(n)); };
  if (!oddPrime(p) || !oddPrime(q))
    throw ValidationError("p and q must be odd primes (got p=" + std::to_string(p) +
                          ", q=" + std::to_string(q) + ")");
  if (p == q)
    throw ValidationError("p and q must be distinct (got p=q=" + std::to_string(p) + ")");
}

int checkedGenerator(std::optional<int> given, int modulus, const char *name) {
  if (!given) return static_cast<int>(smallestPrimitiveRoot(modulus));
  const int r = static_cast<int>(modPos(*given, modulus));
  if (r == 0 || multiplicativeOrder(r, modulus) != static_cast<std::uint64_t>(modulus - 1))
    throw ValidationError(std::string(name) + "=" + std::to_string(*given) +
                          " is not a primitive root modulo " + std::to_string(modulus));
  return r;
}

} // namespace

CatalanParams CatalanParams::make(int p, int q, std::optional<int> c, std::optional<int> d) {
  requireOddPrimePair(p, q);
  CatalanParams params;
  params.p = p;
  params.q = q;
  params.c = checkedGenerator(c, p, "c");
  params.d = checkedGenerator(d, q, "d");
  params.g = (p - 1) * (q - 1) / 2;
  return params;
}

int genus(int p, int q) {
  requireOddPrimePair(p, q);
  return (p - 1) * (q - 1) / 2;
}

int kOfB(int p, int q, int b) {
  if (b < 0 || b > q - 1)
    throw ValidationError("kOfB: b=" + std::to_string(b) + " outside [0, q-1]");
  if (b == 0) return 0;
  return static_cast<int>(floorDiv(static_cast<std::int64_t>(p) * b - q - 1, q));
}

int kappa(int p, int q, int t) {
  if (t < 0 || t > q - 1)
    throw ValidationError("kappa: t=" + std::to_string(t) + " outside [0, q-1]");
  int sum = 0;
  for (int b = 1; b <= t; ++b) {
    const int k = kOfB(p, q, b);
    if (k >= 0) sum += k + 1;
  }
  return sum;
}

std::vector<BasisElement> buildBasis(const CatalanParams &params) {
  const int p = params.p, q = params.q;
  std::vector<BasisElement> basis;
  basis.reserve(params.g);
  int index = 1;
  for (int b = 1; b <= q - 1; ++b) {
    // a <= k_b already forces a < p.
    for (int a = 0; a <= kOfB(p, q, b); ++a) {
      BasisElement el;
      el.i = index++;
      el.a = a;
      el.b = b;
      el.e = q * (a + 1) - p * b;
      el.eModPQ = static_cast<int>(modPos(el.e, params.pq()));
      basis.push_back(el);
    }
  }
  if (static_cast<int>(basis.size()) != params.g)
    throw ComputationError("buildBasis: basis size differs from the genus");
  return basis;
}

std::vector<int> endomorphismAlpha(const CatalanParams &params) {
  std::vector<int> exps;
  for (const auto &el : buildBasis(params)) exps.push_back(el.e);
  return exps;
}

} // namespace catalan
