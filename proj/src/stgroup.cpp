#include "catalan/stgroup.hpp"

#include <Eigen/Eigenvalues>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

/// Entry of a monomial matrix: sign in {-1, 0, 1} times a monomial.
struct SignedMonomial {
  int sign = 0;
  Monomial mono;
};

using MonoMatrix = std::array<std::array<SignedMonomial, 2>, 2>;

MonoMatrix blockOf(const BlockSignedPerm &b, int i) {
  const Monomial u = Monomial::variable(i);
  const Monomial uInv = u.inverse();
  MonoMatrix x{};
  if (b.flag(i) == Block::I) {
    x[0][0] = {1, u};
    x[1][1] = {1, uInv};
  } else {
    x[0][1] = {1, u};
    x[1][0] = {-1, uInv};
  }
  return x;
}

MonoMatrix product(const MonoMatrix &a, const MonoMatrix &b) {
  MonoMatrix out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) {
        if (a[r][k].sign == 0 || b[k][c].sign == 0) continue;
        if (out[r][c].sign != 0) throw ComputationError("cycle product is not a monomial matrix");
        out[r][c] = {a[r][k].sign * b[k][c].sign, a[r][k].mono * b[k][c].mono};
      }
  return out;
}

using TPoly = std::vector<LaurentPoly>; // index = power of T

TPoly multiplyTruncated(const TPoly &a, const TPoly &b, std::size_t maxDegree, std::size_t budget) {
  const std::size_t deg = std::min(a.size() + b.size() - 2, maxDegree);
  TPoly out(deg + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= deg; ++j) {
      if (b[j].isZero()) continue;
      out[i + j] += multiply(a[i], b[j], budget);
      if (out[i + j].termCount() > budget)
        throw BudgetExceeded("characteristic polynomial coefficient exceeds the term budget");
    }
  }
  return out;
}

} // namespace

bool SymbolicCharPoly::isPalindromic() const {
  const int n = degree();
  for (int k = 0; k <= n; ++k)
    if (!(coeffs[k] == coeffs[n - k])) return false;
  return true;
}

std::vector<CycleFactor> cycleFactors(const BlockSignedPerm &b) {
  const int g = b.size();
  std::vector<bool> seen(g + 1, false);
  std::vector<CycleFactor> factors;
  for (int start = 1; start <= g; ++start) {
    if (seen[start]) continue;
    MonoMatrix m = blockOf(b, start);
    seen[start] = true;
    int length = 1;
    for (int i = b.target(start); i != start; i = b.target(i)) {
      m = product(m, blockOf(b, i));
      seen[i] = true;
      ++length;
    }
    CycleFactor f;
    f.length = length;
    if (m[0][1].sign == 0 && m[1][0].sign == 0) {
      if (m[0][0].sign * m[1][1].sign != 1 || !(m[0][0].mono * m[1][1].mono).isOne())
        throw ComputationError("diagonal cycle product does not have determinant 1");
      f.trace = LaurentPoly(m[0][0].mono, m[0][0].sign) + LaurentPoly(m[1][1].mono, m[1][1].sign);
    } else {
      if (m[0][1].sign * m[1][0].sign != -1 || !(m[0][1].mono * m[1][0].mono).isOne())
        throw ComputationError("antidiagonal cycle product does not have determinant 1");
      f.antidiagonal = true;
    }
    factors.push_back(std::move(f));
  }
  return factors;
}

SymbolicCharPoly charPolySymbolic(const BlockSignedPerm &b, std::size_t budget) {
  const auto factors = cycleFactors(b);
  TPoly poly{LaurentPoly(1L)};
  for (const auto &f : factors) {
    TPoly factor(2 * f.length + 1);
    factor[0] = LaurentPoly(1L);
    factor[2 * f.length] = LaurentPoly(1L);
    if (!f.antidiagonal) factor[f.length] = -f.trace;
    poly = multiplyTruncated(poly, factor, poly.size() + factor.size(), budget);
  }
  // poly[j] is the coefficient of T^j; b_k sits at T^{2g-k}.
  SymbolicCharPoly out;
  const int n = static_cast<int>(poly.size()) - 1;
  for (int k = 0; k <= n; ++k) out.coeffs.push_back(poly[n - k]);
  return out;
}

std::vector<LaurentPoly> charPolyLowCoefficients(const BlockSignedPerm &b, int maxDegree,
                                                 std::size_t budget) {
  if (maxDegree < 0 || maxDegree > 2 * b.size())
    throw ValidationError("charPolyLowCoefficients: degree out of range");
  const auto factors = cycleFactors(b);
  TPoly poly{LaurentPoly(1L)};
  for (const auto &f : factors) {
    // Reversed factor 1 - trace*T^r + T^{2r} has the same coefficients.
    TPoly factor(2 * f.length + 1);
    factor[0] = LaurentPoly(1L);
    factor[2 * f.length] = LaurentPoly(1L);
    if (!f.antidiagonal) factor[f.length] = -f.trace;
    poly = multiplyTruncated(poly, factor, static_cast<std::size_t>(maxDegree), budget);
  }
  poly.resize(maxDegree + 1);
  return poly;
}

std::vector<std::complex<double>> numericCharPoly(const Eigen::MatrixXcd &m) {
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  const auto &eigenvalues = solver.eigenvalues();
  std::vector<std::complex<double>> coeffs{1.0};
  for (Eigen::Index j = 0; j < eigenvalues.size(); ++j) {
    coeffs.push_back(0.0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] -= eigenvalues(j) * coeffs[k - 1];
  }
  return coeffs;
}

} // namespace catalan
