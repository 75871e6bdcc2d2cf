#include <doctest.h>

#include <functional>

#include "catalan/errors.hpp"
#include "catalan/moments.hpp"
#include "catalan/stgroup.hpp"
#include "oracles.hpp"

using namespace catalan;

namespace {

std::vector<Rational> ints(std::initializer_list<long long> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(BigInt(v));
  return out;
}

BigInt compositionsOracle(unsigned n, unsigned g) {
  // Sum over beta_1 + ... + beta_g = n of n!/prod(beta_j!) * prod C(beta_j, beta_j/2).
  BigInt total = 0;
  std::vector<unsigned> beta(g, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned j, unsigned left) {
    if (j + 1 == g) {
      beta[j] = left;
      BigInt term = 1;
      unsigned used = 0;
      for (unsigned b : beta) {
        if (b % 2) return;
        term *= binomial(used + b, b) * binomial(b, b / 2);
        used += b;
      }
      total += term;
      return;
    }
    for (unsigned b = 0; b <= left; ++b) {
      beta[j] = b;
      rec(j + 1, left - b);
    }
  };
  if (g == 0) return n == 0 ? BigInt(1) : BigInt(0);
  rec(0, n);
  return total;
}

} // namespace

TEST_CASE("subfield bookkeeping") {
  const auto params = CatalanParams::make(5, 3);
  CHECK(subfieldLabel(params, Subfield::QZetaP) == "Q(zeta_5)");
  CHECK(subfieldLabel(params, Subfield::K) == "Q(zeta_15)");
  CHECK(parseSubfield(params, "Q(zeta_3)") == Subfield::QZetaQ);
  CHECK(parseSubfield(params, "Q(zeta_pq)") == Subfield::K);
  CHECK_THROWS_AS(parseSubfield(params, "Q(zeta_7)"), ValidationError);
  CHECK(subgroupOrder(params, Subfield::Q) == 8);
  CHECK(subgroupOrder(params, Subfield::QZetaP) == 2);
  CHECK(subgroupOrder(params, Subfield::QZetaQ) == 4);
  CHECK(subgroupOrder(params, Subfield::K) == 1);
  for (auto [m, n] : subgroupIndices(params, Subfield::QZetaP)) CHECK(m == 0);
  for (auto [m, n] : subgroupIndices(params, Subfield::QZetaQ)) CHECK(n == 0);
}

TEST_CASE("(5,3) tables for mu_1, mu_2, mu_3") {
  const auto params = CatalanParams::make(5, 3);
  const ComponentGroup group(params);
  struct Expected {
    Subfield field;
    std::vector<std::vector<Rational>> rows;
  };
  const std::vector<Expected> expected{
      {Subfield::Q,
       {ints({1, 0, 1, 0, 21, 0, 640, 0, 23765}),
        ints({1, 1, 8, 76, 1168, 20956, 414284, 8643328, 187416464}),
        ints({1, 0, 13, 0, 11745, 0, 17177080, 0, 31036079585})}},
      {Subfield::QZetaQ,
       {ints({1, 0, 2, 0, 42, 0, 1280, 0, 47530}),
        ints({1, 1, 11, 136, 2263, 41656, 827444, 17282560, 374815319}),
        ints({1, 0, 26, 0, 23490, 0, 34354160, 0, 62072159170})}},
      {Subfield::QZetaP,
       {ints({1, 0, 4, 0, 84, 0, 2560, 0, 95060}),
        ints({1, 2, 22, 272, 4526, 83312, 1654888, 34565120, 749630638}),
        ints({1, 0, 52, 0, 46980, 0, 68708320, 0, 124144318340})}},
      {Subfield::K,
       {ints({1, 0, 8, 0, 168, 0, 5120, 0, 190120}),
        ints({1, 4, 40, 544, 9016, 166624, 3309376, 69130240, 1499256376}),
        ints({1, 0, 104, 0, 93960, 0, 137416640, 0, 248288636680})}},
  };
  for (const auto &e : expected) {
    const auto table = momentTable(group, e.field, 3, 8);
    CHECK(table.isIntegral());
    for (int i = 0; i < 3; ++i) CHECK(table.rows[i] == e.rows[i]);
  }
}

TEST_CASE("moments agree with the principal-minor oracle") {
  for (auto [p, q] : {std::pair{5, 3}, std::pair{3, 5}, std::pair{7, 3}}) {
    const auto params = CatalanParams::make(p, q);
    const ComponentGroup group(params);
    const int maxIndex = std::min(params.g, 4);
    const unsigned nmax = params.g <= 4 ? 5 : 3;
    std::vector<std::vector<std::vector<BigInt>>> perComponent; // [component][i][n]
    for (const auto &e : group.elements()) {
      const auto minors = oracle::charPolyByMinors(e.matrix);
      std::vector<std::vector<BigInt>> rows;
      for (int i = 1; i <= maxIndex; ++i) {
        std::vector<BigInt> row;
        for (unsigned n = 0; n <= nmax; ++n) row.push_back(oracle::constantTermOfPowerDirect(minors[i], n));
        rows.push_back(row);
      }
      perComponent.push_back(rows);
    }
    for (auto field : kAllSubfields) {
      const auto table = momentTable(group, field, maxIndex, nmax);
      const auto indices = subgroupIndices(params, field);
      for (int i = 1; i <= maxIndex; ++i)
        for (unsigned n = 0; n <= nmax; ++n) {
          BigInt sum = 0;
          for (auto [m, nn] : indices) sum += perComponent[m * (q - 1) + nn][i - 1][n];
          CHECK(table.rows[i - 1][n] == Rational(sum) / Rational(BigInt(static_cast<long>(indices.size()))));
        }
    }
  }
}

TEST_CASE("(5,3) mu_4 over K, first entries") {
  const auto params = CatalanParams::make(5, 3);
  CHECK(momentMuI(params, Subfield::K, 4, 1) == 6);
  CHECK(momentMuI(params, Subfield::K, 4, 2) == 148);
  CHECK(momentMuI(params, Subfield::Q, 4, 1) == 2);
}

TEST_CASE("momentsU1g") {
  for (unsigned g = 1; g <= 6; ++g) CHECK(momentsU1g(2, g) == 2 * g);
  CHECK(momentsU1g(4, 4) == 168);
  CHECK(momentsU1g(6, 6) == 19920);
  CHECK(momentsU1g(6, 6) == 12 * 1660);
  CHECK(momentsU1g(0, 0) == 1);
  CHECK(momentsU1g(3, 5) == 0);
  for (unsigned g = 1; g <= 5; ++g)
    for (unsigned n = 0; n <= 8; ++n) CHECK(momentsU1g(n, g) == compositionsOracle(n, g));
  // Independent factors convolve binomially.
  for (unsigned n = 0; n <= 10; ++n) {
    BigInt conv = 0;
    for (unsigned k = 0; k <= n; ++k) conv += binomial(n, k) * momentsU1g(k, 2) * momentsU1g(n - k, 3);
    CHECK(conv == momentsU1g(n, 5));
  }
  // The identity component gives the same value through the symbolic pipeline.
  const auto identity = charPolyLowCoefficients(BlockSignedPerm::identity(6), 1);
  CHECK(haarConstantTerm(power(identity[1], 6)) == momentsU1g(6, 6));
}

TEST_CASE("fast mu_1 path") {
  for (auto [p, q] : oracle::primePairs(52)) {
    const auto params = CatalanParams::make(p, q);
    const ComponentGroup group(params);
    CHECK(momentMu1Fast(params, Subfield::Q, 2) == 1);
    CHECK(momentMu1Fast(params, Subfield::QZetaP, 2) == p - 1);
    CHECK(momentMu1Fast(params, Subfield::QZetaQ, 2) == q - 1);
    CHECK(momentMu1Fast(params, Subfield::K, 2) == (p - 1) * (q - 1));
    for (auto field : kAllSubfields) {
      const auto table = momentTable(group, field, 1, 10);
      for (unsigned n = 0; n <= 10; ++n) {
        CHECK(table.rows[0][n] == momentMu1Fast(params, field, n));
        if (n > 0)
          CHECK(momentMu1Fast(params, field, n) * subgroupOrder(params, field) ==
                momentMu1Fast(params, Subfield::Q, n) * params.groupOrder());
      }
    }
  }
  CHECK(momentMu1Fast(CatalanParams::make(17, 3), Subfield::Q, 8) == 2840285);
}

TEST_CASE("M_1[a_2] and the Frobenius-Schur indicator") {
  const auto p53 = CatalanParams::make(5, 3);
  CHECK(m1A2Moment(p53, Subfield::Q) == 1);
  CHECK(m1A2Moment(p53, Subfield::QZetaP) == 2);
  CHECK(m1A2Moment(p53, Subfield::K) == 4);
  for (auto [p, q] : oracle::primePairs(101)) {
    const auto params = CatalanParams::make(p, q);
    CHECK(s2Moment(params, Subfield::Q) == -1);
    CHECK(s2Moment(params, Subfield::QZetaP) == 0);
    CHECK(s2Moment(params, Subfield::QZetaQ) == 0);
    CHECK(s2Moment(params, Subfield::K) == 0);
    CHECK(m1A2Moment(params, Subfield::Q) == 1);
    CHECK(m1A2Moment(params, Subfield::QZetaP) == Rational(p - 1, 2));
  }
}

TEST_CASE("parallel evaluation is deterministic") {
  const auto params = CatalanParams::make(7, 3);
  const ComponentGroup group(params);
  const auto serial = momentTable(group, Subfield::Q, 3, 6, {kDefaultTermBudget, 1});
  const auto parallel = momentTable(group, Subfield::Q, 3, 6, {kDefaultTermBudget, 4});
  CHECK(serial.rows == parallel.rows);
}

TEST_CASE("term budget guard") {
  const auto params = CatalanParams::make(17, 3);
  CHECK_THROWS_AS(momentMuI(params, Subfield::K, 16, 8, {10000, 1}), BudgetExceeded);
  CHECK_THROWS_AS(momentMuI(params, Subfield::K, 17, 1), ValidationError);
}
