#include <doctest.h>

#include <numeric>
#include <set>

#include "catalan/errors.hpp"
#include "catalan/params.hpp"
#include "oracles.hpp"

using namespace catalan;

TEST_CASE("genus") {
  CHECK(genus(5, 3) == 4);
  CHECK(genus(7, 3) == 6);
  CHECK(genus(3, 5) == 4);
  CHECK_THROWS_AS(genus(3, 3), ValidationError);
  CHECK_THROWS_AS(genus(4, 3), ValidationError);
  CHECK_THROWS_AS(genus(9, 5), ValidationError);
  CHECK_THROWS_AS(genus(2, 3), ValidationError);
}

TEST_CASE("params defaults and validation") {
  const auto p73 = CatalanParams::make(7, 3);
  CHECK(p73.c == 3);
  CHECK(p73.d == 2);
  CHECK(p73.g == 6);
  CHECK(CatalanParams::make(5, 3).c == 2);
  CHECK(CatalanParams::make(7, 3, 5).c == 5);
  CHECK_THROWS_AS(CatalanParams::make(7, 3, 2), ValidationError); // 2 has order 3 mod 7
  CHECK_THROWS_AS(CatalanParams::make(7, 3, std::nullopt, 1), ValidationError);
  CHECK_THROWS_AS(CatalanParams::make(7, 7), ValidationError);
  for (auto [p, q] : oracle::primePairs(500)) {
    const auto params = CatalanParams::make(p, q);
    CHECK(multiplicativeOrder(params.c, p) == static_cast<std::uint64_t>(p - 1));
    CHECK(multiplicativeOrder(params.d, q) == static_cast<std::uint64_t>(q - 1));
  }
}

TEST_CASE("kOfB") {
  CHECK(kOfB(7, 3, 1) == 1);
  CHECK(kOfB(5, 3, 0) == 0);
  CHECK(kOfB(5, 7, 1) == -1);
  CHECK_THROWS_AS(kOfB(5, 3, 3), ValidationError);
  CHECK_THROWS_AS(kOfB(5, 3, -1), ValidationError);
  for (auto [p, q] : oracle::primePairs(500))
    for (int b = 1; b + 1 < q; ++b) CHECK(kOfB(p, q, b) <= kOfB(p, q, b + 1));
}

TEST_CASE("kappa counts basis elements up to b = t") {
  CHECK(kappa(7, 3, 2) == 6);
  CHECK(kappa(5, 3, 0) == 0);
  CHECK(kappa(5, 3, 1) == 1);
  CHECK_THROWS_AS(kappa(5, 3, 3), ValidationError);
  for (auto [p, q] : oracle::primePairs(500)) {
    const auto basis = oracle::holomorphicBasis(p, q);
    for (int t = 0; t < q; ++t) {
      const auto count = std::count_if(basis.begin(), basis.end(), [&](auto ab) { return ab.second <= t; });
      CHECK(kappa(p, q, t) == count);
    }
    CHECK(kappa(p, q, q - 1) == genus(p, q));
  }
}

TEST_CASE("basis ordering") {
  const auto basis = buildBasis(CatalanParams::make(7, 3));
  const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2}};
  REQUIRE(basis.size() == expected.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    CHECK(basis[k].i == static_cast<int>(k) + 1);
    CHECK(basis[k].a == expected[k].first);
    CHECK(basis[k].b == expected[k].second);
  }
  for (auto [p, q] : oracle::primePairs(500)) {
    const auto params = CatalanParams::make(p, q);
    const auto built = buildBasis(params);
    const auto brute = oracle::holomorphicBasis(p, q);
    REQUIRE(built.size() == brute.size());
    CHECK(static_cast<int>(built.size()) == params.g);
    std::set<int> residues;
    for (std::size_t k = 0; k < built.size(); ++k) {
      CHECK(built[k].a == brute[k].first);
      CHECK(built[k].b == brute[k].second);
      CHECK(built[k].a <= kOfB(p, q, built[k].b));
      CHECK(std::gcd(built[k].eModPQ, p * q) == 1);
      residues.insert(built[k].eModPQ);
    }
    CHECK(static_cast<int>(residues.size()) == params.g);
  }
}

TEST_CASE("endomorphism alpha") {
  const auto params = CatalanParams::make(7, 3);
  CHECK(endomorphismAlpha(params) == std::vector<int>{-4, -1, -11, -8, -5, -2});
  std::vector<int> reduced;
  for (const auto &el : buildBasis(params)) reduced.push_back(el.eModPQ);
  CHECK(reduced == std::vector<int>{17, 20, 10, 13, 16, 19});
  for (int e : endomorphismAlpha(CatalanParams::make(5, 3))) CHECK(std::gcd(modPos(e, 15), std::int64_t{15}) == 1);
}

TEST_CASE("floor bound holds exhaustively for pq < 500") {
  for (auto [p, q] : oracle::primePairs(500)) {
    for (int beta = 1; beta < q; ++beta) {
      // Largest integer strictly below (p(q-beta) - q + 1)/q.
      const std::int64_t num = static_cast<std::int64_t>(p) * (q - beta) - q + 1;
      const std::int64_t lambdaMax = -floorDiv(-num, q) - 1;
      CHECK(lambdaMax <= floorDiv(static_cast<std::int64_t>(p) * (q - beta) - q - 1, q));
    }
  }
}

TEST_CASE("number theory helpers") {
  CHECK(primesUpTo(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primeFactors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(smallestPrimitiveRoot(7) == 3);
  CHECK(smallestPrimitiveRoot(31) == 3);
  CHECK(powMod(3, 6, 7) == 1);
  CHECK(binomial(8, 4) == 70);
  CHECK(floorDiv(-7, 3) == -3);
  CHECK(modPos(-7, 3) == 2);
}
