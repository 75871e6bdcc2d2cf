#include "catalan/lfunc.hpp"

#include <cmath>
#include <set>

#include "catalan/errors.hpp"
#include "catalan/finite_field.hpp"
#include "catalan/parallel.hpp"
#include "catalan/trace_cache.hpp"

namespace catalan {

std::optional<std::int64_t> PrimeTrace::t2() const {
  if (!n2) return std::nullopt;
  const auto l = static_cast<std::int64_t>(ell);
  return l * l + 1 - *n2;
}

PrimeTrace PrimeTrace::fromTraces(std::uint64_t ell, std::int64_t t1,
                                  std::optional<std::int64_t> t2) {
  const auto l = static_cast<std::int64_t>(ell);
  PrimeTrace t;
  t.ell = ell;
  t.n1 = l + 1 - t1;
  if (t2) t.n2 = l * l + 1 - *t2;
  return t;
}

std::int64_t lpolyC1(const PrimeTrace &trace) { return -trace.t1(); }

std::optional<std::int64_t> lpolyC2(const PrimeTrace &trace) {
  const auto t2 = trace.t2();
  if (!t2) return std::nullopt;
  const std::int64_t s1 = trace.t1();
  const std::int64_t twice = s1 * s1 - *t2;
  if (twice % 2 != 0) throw ComputationError("Newton identity gives a non-integral c2");
  return twice / 2;
}

NormalizedCoeffs normalize(const PrimeTrace &trace) {
  NormalizedCoeffs out;
  const double ell = static_cast<double>(trace.ell);
  out.a1 = static_cast<double>(lpolyC1(trace)) / std::sqrt(ell);
  if (auto c2 = lpolyC2(trace)) out.a2 = static_cast<double>(*c2) / ell;
  return out;
}

bool isGoodPrime(const CatalanParams &params, std::uint64_t ell) {
  return isPrime(ell) && ell != static_cast<std::uint64_t>(params.p) &&
         ell != static_cast<std::uint64_t>(params.q);
}

bool satisfiesWeilBound(const CatalanParams &params, const PrimeTrace &trace) {
  const double ell = static_cast<double>(trace.ell);
  const double g = params.g;
  if (std::abs(static_cast<double>(trace.t1())) > 2.0 * g * std::sqrt(ell) + 1e-9) return false;
  if (auto c2 = lpolyC2(trace)) {
    const double bound = g * (2.0 * g - 1.0) * ell; // C(2g, 2) * ell
    if (std::abs(static_cast<double>(*c2)) > bound + 1e-9) return false;
  }
  return true;
}

namespace {

void requireGoodPrime(const CatalanParams &params, std::uint64_t ell) {
  if (!isGoodPrime(params, ell))
    throw ValidationError(std::to_string(ell) + " is not a prime of good reduction for (p,q)=(" +
                          std::to_string(params.p) + "," + std::to_string(params.q) + ")");
  if (ell >= (1ULL << 31)) throw ValidationError("prime exceeds the supported range 2^31");
}

} // namespace

std::int64_t countPointsPrime(const CatalanParams &params, std::uint64_t ell) {
  requireGoodPrime(params, ell);
  const std::uint64_t p = params.p, q = params.q;
  const std::uint64_t order = ell - 1;
  if (order % p != 0 || order % q != 0) return static_cast<std::int64_t>(ell) + 1;

  // Nonzero q-th powers are the powers of r^q; each has q roots.
  const std::uint64_t r = primitiveRootModPrime(ell);
  std::vector<std::uint8_t> isQthPower(ell, 0);
  const std::uint64_t stepQ = powMod(r, q, ell);
  for (std::uint64_t k = 0, x = 1; k < order / q; ++k, x = mulMod(x, stepQ, ell)) isQthPower[x] = 1;
  auto rootCount = [&](std::uint64_t u) -> std::int64_t {
    return u == 0 ? 1 : (isQthPower[u] ? static_cast<std::int64_t>(q) : 0);
  };

  // x = 0 contributes N(-1); nonzero x^p runs p-to-1 over the powers of r^p.
  std::int64_t affine = rootCount(ell - 1);
  const std::uint64_t stepP = powMod(r, p, ell);
  std::int64_t sum = 0;
  for (std::uint64_t k = 0, v = 1; k < order / p; ++k, v = mulMod(v, stepP, ell))
    sum += rootCount((v + ell - 1) % ell);
  affine += static_cast<std::int64_t>(p) * sum;
  return affine + 1;
}

std::int64_t countPointsPrimeTabulated(const CatalanParams &params, std::uint64_t ell) {
  requireGoodPrime(params, ell);
  std::vector<std::int64_t> roots(ell, 0);
  for (std::uint64_t y = 0; y < ell; ++y) ++roots[powMod(y, params.q, ell)];
  std::int64_t affine = 0;
  for (std::uint64_t x = 0; x < ell; ++x) affine += roots[(powMod(x, params.p, ell) + ell - 1) % ell];
  return affine + 1;
}

std::int64_t countPointsExt2(const CatalanParams &params, std::uint64_t ell, std::uint64_t cap) {
  requireGoodPrime(params, ell);
  if (ell > cap)
    throw ValidationError("prime " + std::to_string(ell) + " exceeds the extension-field cap " +
                          std::to_string(cap));
  const std::uint64_t p = params.p, q = params.q;
  const std::uint64_t size = ell * ell;
  const std::uint64_t order = size - 1;
  // Either power map being a bijection forces sum_x N(x^p - 1) = size.
  if (order % p != 0 || order % q != 0) return static_cast<std::int64_t>(size) + 1;

  const QuadraticExtension field(ell);
  const auto gen = field.primitiveElement();
  std::vector<std::uint8_t> isQthPower(size, 0);
  const auto stepQ = field.pow(gen, q);
  auto x = field.one();
  for (std::uint64_t k = 0; k < order / q; ++k, x = field.mul(x, stepQ)) isQthPower[field.index(x)] = 1;
  const auto zero = QuadraticExtension::Elem{0, 0};
  auto rootCount = [&](QuadraticExtension::Elem u) -> std::int64_t {
    if (u == zero) return 1;
    return isQthPower[field.index(u)] ? static_cast<std::int64_t>(q) : 0;
  };

  const auto one = field.one();
  std::int64_t affine = rootCount(field.sub(zero, one));
  const auto stepP = field.pow(gen, p);
  std::int64_t sum = 0;
  auto v = one;
  for (std::uint64_t k = 0; k < order / p; ++k, v = field.mul(v, stepP)) sum += rootCount(field.sub(v, one));
  affine += static_cast<std::int64_t>(p) * sum;
  return affine + 1;
}

PrimeTrace computePrimeTrace(const CatalanParams &params, std::uint64_t ell, bool withExt2,
                             std::uint64_t ext2Cap) {
  PrimeTrace t;
  t.ell = ell;
  t.n1 = countPointsPrime(params, ell);
  if (withExt2) t.n2 = countPointsExt2(params, ell, ext2Cap);
  return t;
}

namespace {

/// Element of Z[x]/(x^n - 1); x stands for zeta_n.
using CyclicInt = std::vector<BigInt>;

CyclicInt cyclicMul(const CyclicInt &a, const CyclicInt &b) {
  const std::size_t n = a.size();
  CyclicInt out(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      out[(i + j) % n] += a[i] * b[j];
    }
  }
  return out;
}

/// Exact quotient of integer polynomials (coefficients low to high) by a monic divisor.
std::vector<BigInt> polyDivide(std::vector<BigInt> num, const std::vector<BigInt> &den,
                               std::vector<BigInt> *remainder = nullptr) {
  const std::size_t dd = den.size() - 1;
  std::vector<BigInt> quot(num.size() >= den.size() ? num.size() - dd : 1, BigInt(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    const BigInt c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  if (remainder) {
    num.resize(dd);
    *remainder = std::move(num);
  }
  return quot;
}

std::vector<BigInt> cyclotomicPolynomial(int p, int q) {
  // Phi_pq = (x^pq - 1) / ((x - 1) Phi_p Phi_q)
  const int n = p * q;
  std::vector<BigInt> num(n + 1, BigInt(0));
  num[0] = -1;
  num[n] = 1;
  num = polyDivide(num, {BigInt(-1), BigInt(1)});
  num = polyDivide(num, std::vector<BigInt>(p, BigInt(1)));
  num = polyDivide(num, std::vector<BigInt>(q, BigInt(1)));
  return num;
}

/// Rational integer represented by a cyclic element; throws if it is not one.
BigInt toInteger(const CyclicInt &a, const std::vector<BigInt> &phi) {
  std::vector<BigInt> rem;
  polyDivide(a, phi, &rem);
  for (std::size_t k = 1; k < rem.size(); ++k)
    if (rem[k] != 0) throw ComputationError("Jacobi-sum product is not a rational integer");
  return rem.empty() ? BigInt(0) : rem[0];
}

} // namespace

std::vector<BigInt> lpolySplitJacobi(const CatalanParams &params, std::uint64_t ell) {
  requireGoodPrime(params, ell);
  const int pq = params.pq();
  if ((ell - 1) % static_cast<std::uint64_t>(pq) != 0)
    throw ValidationError("lpolySplitJacobi requires ell = 1 mod pq (got " + std::to_string(ell) + ")");

  // Discrete logs mod pq, then the joint histogram of (log u, log(1-u)).
  const std::uint64_t r = primitiveRootModPrime(ell);
  std::vector<int> dlog(ell, -1);
  for (std::uint64_t k = 0, x = 1; k < ell - 1; ++k, x = mulMod(x, r, ell))
    dlog[x] = static_cast<int>(k % pq);
  std::vector<std::int64_t> hist(static_cast<std::size_t>(pq) * pq, 0);
  for (std::uint64_t u = 2; u < ell; ++u) ++hist[dlog[u] * pq + dlog[ell + 1 - u]];

  auto negJacobi = [&](int a, int b) {
    CyclicInt out(pq, BigInt(0));
    for (int x = 0; x < pq; ++x)
      for (int y = 0; y < pq; ++y) {
        const auto h = hist[x * pq + y];
        if (h != 0) out[modPos(static_cast<std::int64_t>(a) * x + static_cast<std::int64_t>(b) * y, pq)] -= h;
      }
    return out;
  };

  std::vector<CyclicInt> poly{CyclicInt(pq, BigInt(0))};
  poly[0][0] = 1;
  auto mulLinear = [&](const CyclicInt &alpha) {
    // poly *= (1 - alpha T)
    poly.emplace_back(pq, BigInt(0));
    for (std::size_t k = poly.size() - 1; k >= 1; --k) {
      const auto prod = cyclicMul(alpha, poly[k - 1]);
      for (int j = 0; j < pq; ++j) poly[k][j] -= prod[j];
    }
  };
  for (const auto &el : buildBasis(params)) {
    const int a = params.q * (el.a + 1);
    const int b = static_cast<int>(modPos(-static_cast<std::int64_t>(params.p) * el.b, pq));
    mulLinear(negJacobi(a, b));
    mulLinear(negJacobi(pq - a, static_cast<int>(modPos(-b, pq))));
  }

  const auto phi = cyclotomicPolynomial(params.p, params.q);
  std::vector<BigInt> coeffs;
  for (const auto &c : poly) coeffs.push_back(toInteger(c, phi));
  return coeffs;
}

std::string coefficientName(Coefficient c) { return c == Coefficient::A1 ? "a1" : "a2"; }

std::vector<PrimeTrace> collectTraces(const CatalanParams &params, std::uint64_t bound,
                                      bool withExt2, const NumericalOptions &options) {
  std::vector<std::uint64_t> good;
  for (auto ell : primesUpTo(bound))
    if (isGoodPrime(params, ell)) good.push_back(ell);
  if (withExt2 && !good.empty() && good.back() > options.ext2Cap)
    throw ValidationError("a2 moments need primes up to " + std::to_string(good.back()) +
                          ", above the extension-field cap " + std::to_string(options.ext2Cap));

  auto compute = [&](std::uint64_t ell) {
    return computePrimeTrace(params, ell, withExt2, options.ext2Cap);
  };

  if (!options.cacheDir) {
    std::vector<PrimeTrace> out(good.size());
    parallelFor(good.size(), options.workers, [&](std::size_t i) { out[i] = compute(good[i]); });
    return out;
  }

  TraceCache cache(TraceCache::pathFor(*options.cacheDir, params), params, options.warn);
  auto records = cache.load();

  std::vector<std::uint64_t> need;
  bool upgrade = false;
  for (auto ell : good) {
    auto it = records.find(ell);
    if (it == records.end()) {
      need.push_back(ell);
    } else if (withExt2 && !it->second.n2) {
      need.push_back(ell);
      upgrade = true;
    }
  }

  std::map<std::uint64_t, PrimeTrace> computed;
  if (!need.empty()) {
    const bool append = !upgrade && (records.empty() || need.front() > records.rbegin()->first);
    std::vector<std::uint64_t> order;
    std::map<std::uint64_t, PrimeTrace> prefilled;
    if (append) {
      order = need;
    } else {
      std::set<std::uint64_t> all(need.begin(), need.end());
      for (const auto &[ell, rec] : records) all.insert(ell);
      order.assign(all.begin(), all.end());
      const std::set<std::uint64_t> needSet(need.begin(), need.end());
      for (const auto &[ell, rec] : records)
        if (!needSet.count(ell)) prefilled.emplace(ell, rec);
    }
    TraceCacheWriter writer(cache, append ? TraceCacheWriter::Mode::Append : TraceCacheWriter::Mode::Rewrite,
                            std::move(order), std::move(prefilled));
    std::vector<PrimeTrace> fresh(need.size());
    parallelFor(need.size(), options.workers, [&](std::size_t i) {
      fresh[i] = compute(need[i]);
      writer.push(fresh[i]);
    });
    writer.finish();
    for (auto &t : fresh) computed.insert_or_assign(t.ell, std::move(t));
  }

  std::vector<PrimeTrace> out;
  out.reserve(good.size());
  for (auto ell : good) {
    auto it = computed.find(ell);
    out.push_back(it != computed.end() ? it->second : records.at(ell));
  }
  return out;
}

namespace {

/// Neumaier compensated summation.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0;
  double comp_ = 0;
};

} // namespace

NumericalResult numericalMomentsUpTo(const CatalanParams &params, std::uint64_t bound,
                                     const std::vector<int> &orders, Coefficient coeff,
                                     const NumericalOptions &options) {
  for (int n : orders)
    if (n < 0) throw ValidationError("moment orders must be nonnegative");
  const bool ext2 = coeff == Coefficient::A2;
  const auto traces = collectTraces(params, bound, ext2, options);
  if (traces.empty()) throw ValidationError("empty prime range up to " + std::to_string(bound));

  NumericalResult result;
  result.p = params.p;
  result.q = params.q;
  result.bound = bound;
  result.coeff = coeff;
  result.primeCount = traces.size();
  for (const auto &t : traces)
    if ((t.ell - 1) % static_cast<std::uint64_t>(params.pq()) == 0) ++result.splitPrimeCount;
  for (int bad : {params.p, params.q})
    if (static_cast<std::uint64_t>(bad) <= bound) ++result.badPrimesSkipped;

  const double count = static_cast<double>(traces.size());
  for (int n : orders) {
    CompensatedSum sum;
    for (const auto &t : traces) {
      const auto a = normalize(t);
      const double x = ext2 ? *a.a2 : a.a1;
      sum.add(std::pow(x, n));
    }
    result.moments[n] = sum.value() / count;

    if (options.exactMoments && (ext2 || n % 2 == 0)) {
      Rational exact = 0;
      for (const auto &t : traces) {
        const BigInt ell = static_cast<unsigned long>(t.ell);
        if (ext2) {
          exact += Rational(pow(BigInt(*lpolyC2(t)), n), pow(ell, n));
        } else {
          exact += Rational(pow(BigInt(lpolyC1(t)), n), pow(ell, n / 2));
        }
      }
      result.exactMoments[n] = exact / Rational(BigInt(static_cast<unsigned long>(traces.size())));
    }
  }
  return result;
}

NumericalResult numericalMoments(const CatalanParams &params, int N, const std::vector<int> &orders,
                                 Coefficient coeff, const NumericalOptions &options) {
  if (N < 1 || N > 31) throw ValidationError("N must lie in [1, 31]");
  auto result = numericalMomentsUpTo(params, std::uint64_t{1} << N, orders, coeff, options);
  result.N = N;
  return result;
}

} // namespace catalan
