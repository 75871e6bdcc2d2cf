#include "catalan/moments.hpp"

#include "catalan/errors.hpp"
#include "catalan/parallel.hpp"
#include "catalan/stgroup.hpp"

namespace catalan {

std::string subfieldLabel(const CatalanParams &params, Subfield field) {
  switch (field) {
  case Subfield::Q: return "Q";
  case Subfield::QZetaP: return "Q(zeta_" + std::to_string(params.p) + ")";
  case Subfield::QZetaQ: return "Q(zeta_" + std::to_string(params.q) + ")";
  case Subfield::K: return "Q(zeta_" + std::to_string(params.pq()) + ")";
  }
  return {};
}

std::string subfieldTag(Subfield field) {
  switch (field) {
  case Subfield::Q: return "Q";
  case Subfield::QZetaP: return "Q(zeta_p)";
  case Subfield::QZetaQ: return "Q(zeta_q)";
  case Subfield::K: return "Q(zeta_pq)";
  }
  return {};
}

Subfield parseSubfield(const CatalanParams &params, const std::string &text) {
  for (Subfield f : kAllSubfields)
    if (text == subfieldTag(f) || text == subfieldLabel(params, f)) return f;
  throw ValidationError("unknown subfield '" + text + "'");
}

std::vector<std::pair<int, int>> subgroupIndices(const CatalanParams &params, Subfield field) {
  // sigma_p^m fixes zeta_p only for m = 0, sigma_q^n fixes zeta_q only for n = 0.
  const int mMax = (field == Subfield::Q || field == Subfield::QZetaQ) ? params.p - 1 : 1;
  const int nMax = (field == Subfield::Q || field == Subfield::QZetaP) ? params.q - 1 : 1;
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m < mMax; ++m)
    for (int n = 0; n < nMax; ++n) out.emplace_back(m, n);
  return out;
}

int subgroupOrder(const CatalanParams &params, Subfield field) {
  return static_cast<int>(subgroupIndices(params, field).size());
}

bool MomentTable::isIntegral() const {
  for (const auto &row : rows)
    for (const auto &v : row)
      if (denominator(v) != 1) return false;
  return true;
}

MomentTable momentTable(const ComponentGroup &group, Subfield field, int maxIndex, unsigned nmax,
                        const MomentOptions &options) {
  const auto &params = group.params();
  if (maxIndex < 1 || maxIndex > params.g)
    throw ValidationError("moment index must lie in [1, g]");
  const auto indices = subgroupIndices(params, field);

  // perComponent[c][i-1][n] = constant term of b_i^n on component c.
  std::vector<std::vector<std::vector<BigInt>>> perComponent(indices.size());
  parallelFor(indices.size(), options.workers, [&](std::size_t c) {
    const auto &[m, n] = indices[c];
    const auto coeffs =
        charPolyLowCoefficients(group.at(m, n).matrix, maxIndex, options.termBudget);
    for (int i = 1; i <= maxIndex; ++i)
      perComponent[c].push_back(constantTermsOfPowers(coeffs[i], nmax, options.termBudget));
  });

  MomentTable table;
  table.subfield = field;
  const BigInt order = static_cast<long>(indices.size());
  for (int i = 1; i <= maxIndex; ++i) {
    std::vector<Rational> row;
    for (unsigned n = 0; n <= nmax; ++n) {
      BigInt sum = 0;
      for (const auto &comp : perComponent) sum += comp[i - 1][n];
      row.emplace_back(Rational(sum) / Rational(order));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Rational momentMuI(const ComponentGroup &group, Subfield field, int i, unsigned n,
                   const MomentOptions &options) {
  const auto &params = group.params();
  if (i < 1 || i > params.g) throw ValidationError("moment index must lie in [1, g]");
  const auto indices = subgroupIndices(params, field);
  std::vector<BigInt> terms(indices.size());
  parallelFor(indices.size(), options.workers, [&](std::size_t c) {
    const auto &[m, nn] = indices[c];
    const auto coeffs = charPolyLowCoefficients(group.at(m, nn).matrix, i, options.termBudget);
    terms[c] = constantTermsOfPowers(coeffs[i], n, options.termBudget).back();
  });
  BigInt sum = 0;
  for (const auto &t : terms) sum += t;
  return Rational(sum) / Rational(BigInt(static_cast<long>(indices.size())));
}

Rational momentMuI(const CatalanParams &params, Subfield field, int i, unsigned n,
                   const MomentOptions &options) {
  return momentMuI(ComponentGroup(params), field, i, n, options);
}

BigInt momentsU1g(unsigned n, unsigned g) {
  // Exponential-generating-function convolution over the g circle factors.
  std::vector<BigInt> single(n + 1, BigInt(0));
  for (unsigned k = 0; k <= n; k += 2) single[k] = binomial(k, k / 2);
  std::vector<BigInt> acc(n + 1, BigInt(0));
  acc[0] = 1;
  for (unsigned j = 0; j < g; ++j) {
    std::vector<BigInt> next(n + 1, BigInt(0));
    for (unsigned total = 0; total <= n; ++total)
      for (unsigned beta = 0; beta <= total; beta += 2)
        next[total] += binomial(total, beta) * single[beta] * acc[total - beta];
    acc = std::move(next);
  }
  return acc[n];
}

Rational momentMu1Fast(const CatalanParams &params, Subfield field, unsigned n) {
  if (n == 0) return 1;
  return Rational(momentsU1g(n, params.g)) /
         Rational(BigInt(subgroupOrder(params, field)));
}

Rational m1A2Moment(const CatalanParams &params, Subfield field, const MomentOptions &options) {
  return momentMuI(params, field, 2, 1, options);
}

Rational s2Moment(const CatalanParams &params, Subfield field, const MomentOptions &options) {
  const Rational fs = momentMu1Fast(params, field, 2) - 2 * m1A2Moment(params, field, options);
  if (fs != -1 && fs != 0 && fs != 1)
    throw ComputationError("Frobenius-Schur indicator " + fs.str() + " outside {-1, 0, 1} over " +
                           subfieldLabel(params, field));
  return fs;
}

} // namespace catalan
