#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "catalan/numeric.hpp"

namespace catalan {

/// Sparse exponent vector u_1^{e_1} ... u_g^{e_g}: only nonzero exponents are
/// stored, sorted by variable index (1-based).
class Monomial {
public:
  struct Entry {
    std::uint16_t var;
    std::int16_t exp;
    friend bool operator==(const Entry &, const Entry &) = default;
    friend auto operator<=>(const Entry &, const Entry &) = default;
  };

  Monomial() = default;
  static Monomial variable(int var, int exp = 1);

  bool isOne() const { return entries_.empty(); }
  int exponent(int var) const;
  std::span<const Entry> entries() const { return {entries_.data(), entries_.size()}; }

  Monomial inverse() const;
  friend Monomial operator*(const Monomial &a, const Monomial &b);

  friend bool operator==(const Monomial &, const Monomial &) = default;
  friend bool operator<(const Monomial &a, const Monomial &b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                        b.entries_.begin(), b.entries_.end());
  }

  std::size_t hash() const;
  std::string toString() const;

private:
  boost::container::small_vector<Entry, 6> entries_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

/// Exact Laurent polynomial in unit-circle variables u_1..u_g with integer
/// coefficients. No zero coefficients are stored.
class LaurentPoly {
public:
  using TermMap = std::unordered_map<Monomial, BigInt, MonomialHash>;

  LaurentPoly() = default;
  LaurentPoly(const BigInt &c); // NOLINT: implicit constant
  LaurentPoly(long c) : LaurentPoly(BigInt(c)) {} // NOLINT
  LaurentPoly(const Monomial &m, const BigInt &c = 1);

  /// u_var^exp
  static LaurentPoly variable(int var, int exp = 1) { return {Monomial::variable(var, exp)}; }

  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  BigInt coefficient(const Monomial &m) const;
  BigInt constantTerm() const { return coefficient(Monomial{}); }
  const TermMap &terms() const { return terms_; }
  /// Terms ordered by monomial, for deterministic output.
  std::vector<std::pair<Monomial, BigInt>> sortedTerms() const;

  void addTerm(const Monomial &m, const BigInt &c);

  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }

  /// Substitutes u_j -> u_j^{-1} for every variable.
  LaurentPoly invertVariables() const;

  /// Evaluates at u_j = values[j-1].
  std::complex<double> evaluate(std::span<const std::complex<double>> values) const;

  std::string toString() const;

private:
  TermMap terms_;
};

/// Default cap on the number of terms any intermediate product may hold.
inline constexpr std::size_t kDefaultTermBudget = 3'000'000;

/// Product with a term-count guard; throws BudgetExceeded when exceeded.
LaurentPoly multiply(const LaurentPoly &a, const LaurentPoly &b,
                     std::size_t budget = kDefaultTermBudget);

/// Exact n-th power, L^0 = 1.
LaurentPoly power(const LaurentPoly &l, unsigned n, std::size_t budget = kDefaultTermBudget);

/// Coefficient of the all-zero exponent vector, i.e. the Haar expectation
/// over U(1)^g.
BigInt haarConstantTerm(const LaurentPoly &l);

/// Constant term of a*b without expanding the product.
BigInt constantTermOfProduct(const LaurentPoly &a, const LaurentPoly &b);

/// Constant terms of L^0, ..., L^nmax. Only powers up to ceil(nmax/2) are
/// expanded; higher ones are paired against them.
std::vector<BigInt> constantTermsOfPowers(const LaurentPoly &l, unsigned nmax,
                                          std::size_t budget = kDefaultTermBudget);

} // namespace catalan
