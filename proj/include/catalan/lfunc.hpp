#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalan/numeric.hpp"
#include "catalan/params.hpp"

namespace catalan {

/// Point counts of the smooth projective model at one good prime.
struct PrimeTrace {
  std::uint64_t ell = 0;
  std::int64_t n1 = 0;                ///< #C(F_ell)
  std::optional<std::int64_t> n2;     ///< #C(F_{ell^2})

  /// Frobenius trace ell + 1 - n1.
  std::int64_t t1() const { return static_cast<std::int64_t>(ell) + 1 - n1; }
  /// Power sum ell^2 + 1 - n2.
  std::optional<std::int64_t> t2() const;

  static PrimeTrace fromTraces(std::uint64_t ell, std::int64_t t1, std::optional<std::int64_t> t2);

  friend bool operator==(const PrimeTrace &, const PrimeTrace &) = default;
};

/// Coefficients of the normalized L-polynomial T^{2g} + a1 T^{2g-1} + a2 T^{2g-2} + ...
/// with a1 = (n1 - ell - 1)/sqrt(ell) and a2 = e2/ell, e2 = (t1^2 - t2)/2.
struct NormalizedCoeffs {
  double a1 = 0;
  std::optional<double> a2;
};

NormalizedCoeffs normalize(const PrimeTrace &trace);

/// L-polynomial coefficients c1 = n1 - ell - 1 and c2 = (t1^2 - t2)/2.
std::int64_t lpolyC1(const PrimeTrace &trace);
std::optional<std::int64_t> lpolyC2(const PrimeTrace &trace);

/// ell prime and different from p and q.
bool isGoodPrime(const CatalanParams &params, std::uint64_t ell);

/// |t1| <= 2g sqrt(ell) and, when present, |c2| <= C(2g,2) ell.
bool satisfiesWeilBound(const CatalanParams &params, const PrimeTrace &trace);

/// #C(F_ell): affine solutions plus the single point at infinity. When the
/// p-th or q-th power map is a bijection of F_ell the answer is ell + 1.
std::int64_t countPointsPrime(const CatalanParams &params, std::uint64_t ell);

/// The same count without the bijection shortcut: tabulates #{y : y^q = u}
/// over all y and sums it over x^p - 1.
std::int64_t countPointsPrimeTabulated(const CatalanParams &params, std::uint64_t ell);

inline constexpr std::uint64_t kDefaultExt2Cap = 4096;

/// #C(F_{ell^2}) for ell <= cap.
std::int64_t countPointsExt2(const CatalanParams &params, std::uint64_t ell,
                             std::uint64_t cap = kDefaultExt2Cap);

PrimeTrace computePrimeTrace(const CatalanParams &params, std::uint64_t ell, bool withExt2,
                             std::uint64_t ext2Cap = kDefaultExt2Cap);

/// Exact L-polynomial 1 + c1 T + ... + ell^g T^{2g} at a prime ell = 1 mod pq,
/// assembled from Jacobi sums of the order-p and order-q characters. The
/// reciprocal roots are the negated Jacobi sums -J(chi^{q(a+1)}, chi^{-pb})
/// and their conjugates, one pair per basis element (a, b).
std::vector<BigInt> lpolySplitJacobi(const CatalanParams &params, std::uint64_t ell);

enum class Coefficient { A1, A2 };
std::string coefficientName(Coefficient c);

struct NumericalOptions {
  unsigned workers = 1;
  /// Directory for the per-curve trace cache; nothing is cached when unset.
  std::optional<std::filesystem::path> cacheDir;
  std::uint64_t ext2Cap = kDefaultExt2Cap;
  /// Also accumulate exact rational moments (a2 all orders, a1 even orders).
  bool exactMoments = false;
  /// Receives cache warnings (corrupt lines, header mismatch).
  std::function<void(const std::string &)> warn;
};

struct NumericalResult {
  int p = 0;
  int q = 0;
  std::optional<int> N;
  std::uint64_t bound = 0;
  Coefficient coeff = Coefficient::A1;
  std::map<int, double> moments;
  std::map<int, Rational> exactMoments;
  std::uint64_t primeCount = 0;
  std::uint64_t splitPrimeCount = 0;
  std::uint64_t badPrimesSkipped = 0;
};

/// Good-prime traces for ell <= bound, ascending, reusing and extending the
/// cache when options.cacheDir is set.
std::vector<PrimeTrace> collectTraces(const CatalanParams &params, std::uint64_t bound,
                                      bool withExt2, const NumericalOptions &options);

/// Averages of a_coeff^n over good primes ell <= bound, for each n in orders.
NumericalResult numericalMomentsUpTo(const CatalanParams &params, std::uint64_t bound,
                                     const std::vector<int> &orders, Coefficient coeff,
                                     const NumericalOptions &options = {});

/// numericalMomentsUpTo with bound 2^N.
NumericalResult numericalMoments(const CatalanParams &params, int N, const std::vector<int> &orders,
                                 Coefficient coeff, const NumericalOptions &options = {});

} // namespace catalan
