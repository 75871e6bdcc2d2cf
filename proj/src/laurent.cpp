#include "catalan/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "catalan/errors.hpp"

namespace catalan {

Monomial Monomial::variable(int var, int exp) {
  Monomial m;
  if (var < 1 || var > 0xFFFF) throw ValidationError("Monomial: variable index out of range");
  if (exp != 0)
    m.entries_.push_back({static_cast<std::uint16_t>(var), static_cast<std::int16_t>(exp)});
  return m;
}

int Monomial::exponent(int var) const {
  for (const auto &e : entries_)
    if (e.var == var) return e.exp;
  return 0;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto &e : m.entries_) e.exp = static_cast<std::int16_t>(-e.exp);
  return m;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto ia = a.entries_.begin(), ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->var < ib->var) {
      out.entries_.push_back(*ia++);
    } else if (ib->var < ia->var) {
      out.entries_.push_back(*ib++);
    } else {
      const int e = ia->exp + ib->exp;
      if (e > INT16_MAX || e < INT16_MIN) throw ComputationError("Monomial: exponent overflow");
      if (e != 0) out.entries_.push_back({ia->var, static_cast<std::int16_t>(e)});
      ++ia;
      ++ib;
    }
  }
  out.entries_.insert(out.entries_.end(), ia, a.entries_.end());
  out.entries_.insert(out.entries_.end(), ib, b.entries_.end());
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto &e : entries_) {
    const std::uint32_t word = (std::uint32_t(e.var) << 16) | std::uint16_t(e.exp);
    h ^= word;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::toString() const {
  if (entries_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto &e : entries_) {
    if (!first) out << '*';
    first = false;
    out << 'u' << e.var;
    if (e.exp != 1) out << '^' << e.exp;
  }
  return out.str();
}

LaurentPoly::LaurentPoly(const BigInt &c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly::LaurentPoly(const Monomial &m, const BigInt &c) {
  if (c != 0) terms_.emplace(m, c);
}

BigInt LaurentPoly::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<Monomial, BigInt>> LaurentPoly::sortedTerms() const {
  std::vector<std::pair<Monomial, BigInt>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
  return out;
}

void LaurentPoly::addTerm(const Monomial &m, const BigInt &c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  for (const auto &[m, c] : rhs.terms_) addTerm(m, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) {
  for (const auto &[m, c] : rhs.terms_) addTerm(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto &[m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) { return multiply(a, b); }

LaurentPoly multiply(const LaurentPoly &a, const LaurentPoly &b, std::size_t budget) {
  LaurentPoly out;
  const auto &small = a.termCount() <= b.termCount() ? a : b;
  const auto &large = a.termCount() <= b.termCount() ? b : a;
  for (const auto &[ms, cs] : small.terms()) {
    for (const auto &[ml, cl] : large.terms()) {
      out.addTerm(ms * ml, cs * cl);
      if (out.termCount() > budget)
        throw BudgetExceeded("Laurent product exceeds the term budget of " +
                             std::to_string(budget));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::invertVariables() const {
  LaurentPoly out;
  for (const auto &[m, c] : terms_) out.terms_.emplace(m.inverse(), c);
  return out;
}

std::complex<double> LaurentPoly::evaluate(std::span<const std::complex<double>> values) const {
  std::complex<double> sum = 0;
  for (const auto &[m, c] : terms_) {
    std::complex<double> term = c.convert_to<double>();
    for (const auto &e : m.entries()) {
      if (e.var > values.size()) throw ValidationError("evaluate: too few variable values");
      term *= std::pow(values[e.var - 1], static_cast<int>(e.exp));
    }
    sum += term;
  }
  return sum;
}

std::string LaurentPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : sortedTerms()) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    first = false;
    const BigInt mag = abs(c);
    if (m.isOne())
      out << mag;
    else if (mag == 1)
      out << m.toString();
    else
      out << mag << '*' << m.toString();
  }
  return out.str();
}

LaurentPoly power(const LaurentPoly &l, unsigned n, std::size_t budget) {
  LaurentPoly result(1L);
  LaurentPoly base = l;
  while (n > 0) {
    if (n & 1u) result = multiply(result, base, budget);
    n >>= 1;
    if (n > 0) base = multiply(base, base, budget);
  }
  return result;
}

BigInt haarConstantTerm(const LaurentPoly &l) { return l.constantTerm(); }

BigInt constantTermOfProduct(const LaurentPoly &a, const LaurentPoly &b) {
  const auto &small = a.termCount() <= b.termCount() ? a : b;
  const auto &large = a.termCount() <= b.termCount() ? b : a;
  BigInt sum = 0;
  for (const auto &[m, c] : small.terms()) {
    auto it = large.terms().find(m.inverse());
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

std::vector<BigInt> constantTermsOfPowers(const LaurentPoly &l, unsigned nmax, std::size_t budget) {
  std::vector<LaurentPoly> powers{LaurentPoly(1L)};
  const unsigned half = (nmax + 1) / 2;
  for (unsigned k = 1; k <= half; ++k) powers.push_back(multiply(powers.back(), l, budget));
  std::vector<BigInt> out;
  for (unsigned n = 0; n <= nmax; ++n)
    out.push_back(constantTermOfProduct(powers[(n + 1) / 2], powers[n / 2]));
  return out;
}

} // namespace catalan
