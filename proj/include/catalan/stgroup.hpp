#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "catalan/galois.hpp"
#include "catalan/laurent.hpp"

namespace catalan {

/// Coefficients of det(T - U*B) for Haar-random U in U(1)^g:
/// T^{2g} + b_1 T^{2g-1} + ... + b_{2g}. coeffs[k] holds b_k.
struct SymbolicCharPoly {
  std::vector<LaurentPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const LaurentPoly &operator[](int k) const { return coeffs.at(k); }
  bool isPalindromic() const;
};

/// One cycle of the block permutation with the 2x2 monomial matrix obtained by
/// multiplying the blocks of U*B around it.
struct CycleFactor {
  int length = 0;
  /// Trace of the cycle product when it is diagonal; the factor is then
  /// T^{2r} - trace*T^r + 1. Empty for an antidiagonal product (T^{2r} + 1).
  LaurentPoly trace;
  bool antidiagonal = false;
};

/// Cycle decomposition of U*B; throws ComputationError if a cycle product does
/// not have determinant 1.
std::vector<CycleFactor> cycleFactors(const BlockSignedPerm &b);

/// Full characteristic polynomial b_0..b_{2g}.
SymbolicCharPoly charPolySymbolic(const BlockSignedPerm &b,
                                  std::size_t budget = kDefaultTermBudget);

/// b_0..b_maxDegree only, via the reversed (palindromic) factors truncated at
/// T^maxDegree. Feasible for large g when maxDegree is small.
std::vector<LaurentPoly> charPolyLowCoefficients(const BlockSignedPerm &b, int maxDegree,
                                                 std::size_t budget = kDefaultTermBudget);

/// Dense matrix U*B for U = diag(u_1, 1/u_1, ..., u_g, 1/u_g).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
twistedMatrix(const BlockSignedPerm &b, std::span<const Scalar> u) {
  const int g = b.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> diag(2 * g);
  for (int j = 0; j < g; ++j) {
    diag(2 * j) = u[j];
    diag(2 * j + 1) = Scalar(1) / u[j];
  }
  return diag.asDiagonal() * toDense<Scalar>(b);
}

/// Characteristic polynomial coefficients of a dense complex matrix M,
/// highest degree first (c_0 = 1), expanded from the eigenvalues. Accurate
/// to a small multiple of C(n,k) eps when M is unitary.
std::vector<std::complex<double>> numericCharPoly(const Eigen::MatrixXcd &m);

} // namespace catalan
