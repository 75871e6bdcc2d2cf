#pragma once

#include <optional>
#include <vector>

namespace catalan {

/// Configuration for the Catalan curve y^q = x^p - 1.
///
/// p and q are distinct odd primes; c and d generate (Z/pZ)^x and (Z/qZ)^x.
/// The generators default to the smallest primitive roots. Component-group
/// generators depend on this choice, so both can be overridden.
struct CatalanParams {
  int p = 0;
  int q = 0;
  int c = 0;
  int d = 0;
  int g = 0;

  /// Validates everything and fills in defaults; throws ValidationError.
  static CatalanParams make(int p, int q, std::optional<int> c = std::nullopt,
                            std::optional<int> d = std::nullopt);

  int pq() const { return p * q; }
  /// Order of the component group, (p-1)(q-1).
  int groupOrder() const { return (p - 1) * (q - 1); }

  friend bool operator==(const CatalanParams &, const CatalanParams &) = default;
};

/// One holomorphic differential x^a dx / y^b of the ordered basis.
struct BasisElement {
  int i = 0;      ///< 1-based position in the basis
  int a = 0;
  int b = 0;
  int e = 0;      ///< q(a+1) - p*b
  int eModPQ = 0; ///< e reduced into [0, pq)

  friend bool operator==(const BasisElement &, const BasisElement &) = default;
};

/// (p-1)(q-1)/2; throws ValidationError unless p, q are distinct odd primes.
int genus(int p, int q);

/// floor((p*b - q - 1)/q) for 1 <= b <= q-1, and 0 for b = 0.
int kOfB(int p, int q, int b);

/// Number of basis elements with second index in [1, t]: the sum of
/// k_b + 1 over 1 <= b <= t with k_b >= 0. kappa(p, q, q-1) equals the genus.
int kappa(int p, int q, int t);

/// Basis ordered by b ascending, then a ascending; indices start at 1.
std::vector<BasisElement> buildBasis(const CatalanParams &params);

/// Exponents e_i = q(a_i+1) - p*b_i of the diagonal automorphism, in basis order.
std::vector<int> endomorphismAlpha(const CatalanParams &params);

} // namespace catalan
