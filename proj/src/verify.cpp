#include "catalan/verify.hpp"

#include <set>

#include "catalan/classify.hpp"
#include "catalan/errors.hpp"
#include "catalan/lfunc.hpp"
#include "catalan/stgroup.hpp"

namespace catalan {

namespace {

std::string pair(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

CheckResult checkBasis(const CatalanParams &params) {
  const auto basis = buildBasis(params);
  std::set<int> residues;
  for (const auto &el : basis) residues.insert(el.eModPQ);
  if (static_cast<int>(basis.size()) != params.g) return {"basis", false, "size differs from genus"};
  if (static_cast<int>(residues.size()) != params.g) return {"basis", false, "exponents mod pq collide"};
  if (kappa(params.p, params.q, params.q - 1) != params.g) return {"basis", false, "kappa_{q-1} != g"};
  return {"basis", true, std::to_string(params.g) + " elements"};
}

CheckResult checkGenerators(const CatalanParams &params) {
  const auto id = BlockSignedPerm::identity(params.g);
  auto order = [&](const BlockSignedPerm &b) {
    int k = 1;
    for (auto x = b; x != id; x = multiply(x, b)) ++k;
    return k;
  };
  const int op = order(gammaP(params)), oq = order(gammaQ(params));
  const bool ok = op == params.p - 1 && oq == params.q - 1;
  return {"generator orders", ok, "gamma_p " + std::to_string(op) + ", gamma_q " + std::to_string(oq)};
}

CheckResult checkGroup(const ComponentGroup &group) {
  const auto &params = group.params();
  std::set<BlockSignedPerm> distinct;
  for (const auto &e : group.elements()) distinct.insert(e.matrix);
  if (static_cast<int>(distinct.size()) != params.groupOrder())
    return {"component group", false, std::to_string(distinct.size()) + " distinct elements"};
  for (const auto &x : group.elements())
    for (const auto &y : group.elements())
      if (!distinct.count(multiply(x.matrix, y.matrix)))
        return {"component group", false, "not closed at " + pair(x.m, x.n) + "*" + pair(y.m, y.n)};
  return {"component group", true, std::to_string(distinct.size()) + " elements, closed"};
}

CheckResult checkCoherence(const ComponentGroup &group) {
  const auto &params = group.params();
  const auto basis = buildBasis(params);
  const auto alpha = endomorphismAlpha(params);
  for (const auto &e : group.elements()) {
    const auto image = conjugateDiag(e.matrix, alpha);
    for (const auto &el : basis) {
      const int expected = galoisExponent(params, el.a, el.b, e.m, e.n);
      if (modPos(image[el.i - 1], params.pq()) != expected)
        return {"conjugation coherence", false, "mismatch at " + pair(e.m, e.n) + ", block " + std::to_string(el.i)};
    }
  }
  return {"conjugation coherence", true, "all components"};
}

CheckResult checkFixedPoints(const ComponentGroup &group) {
  for (const auto &e : group.elements()) {
    bool fixedI = false;
    for (int i = 1; i <= e.matrix.size(); ++i)
      if (e.matrix.target(i) == i && e.matrix.flag(i) == Block::I) fixedI = true;
    if (fixedI != (e.m == 0 && e.n == 0))
      return {"fixed-point criterion", false, "violated at " + pair(e.m, e.n)};
  }
  return {"fixed-point criterion", true, "I-fixed blocks only at (0,0)"};
}

CheckResult checkMiddleElement(const ComponentGroup &group) {
  const auto &params = group.params();
  const auto &b = group.at((params.p - 1) / 2, (params.q - 1) / 2).matrix;
  // Integer polynomial from the antidiagonal cycle factors T^{2r} + 1.
  std::vector<BigInt> poly{BigInt(1)};
  for (const auto &f : cycleFactors(b)) {
    if (!f.antidiagonal) return {"(T^2+1)^g element", false, "diagonal cycle factor"};
    std::vector<BigInt> next(poly.size() + 2 * f.length, BigInt(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 2 * f.length] += poly[k];
    }
    poly = std::move(next);
  }
  for (int k = 0; k <= params.g; ++k)
    if (poly[2 * k] != binomial(params.g, k)) return {"(T^2+1)^g element", false, "coefficient mismatch"};
  return {"(T^2+1)^g element", true, "component " + pair((params.p - 1) / 2, (params.q - 1) / 2)};
}

CheckResult checkTraceVanishing(const ComponentGroup &group, const MomentOptions &opts) {
  for (const auto &e : group.elements()) {
    const auto coeffs = charPolyLowCoefficients(e.matrix, 1, opts.termBudget);
    const bool zero = coeffs[1] == LaurentPoly();
    if (zero == (e.m == 0 && e.n == 0)) return {"b_1 vanishing", false, "at " + pair(e.m, e.n)};
  }
  return {"b_1 vanishing", true, "b_1 = 0 off the identity component"};
}

CheckResult checkMoments(const ComponentGroup &group, const VerifyOptions &options) {
  const auto &params = group.params();
  if (params.g > options.fullMomentGenusLimit)
    return {"mu_1 fast path", true, "skipped (g above limit)"};
  for (auto field : kAllSubfields) {
    const auto table = momentTable(group, field, 1, options.crossOrderLimit, options.moments);
    if (!table.isIntegral()) return {"mu_1 fast path", false, "non-integral entry over " + subfieldLabel(params, field)};
    for (unsigned n = 0; n <= options.crossOrderLimit; ++n)
      if (table.rows[0][n] != momentMu1Fast(params, field, n))
        return {"mu_1 fast path", false, "M_" + std::to_string(n) + " over " + subfieldLabel(params, field)};
  }
  return {"mu_1 fast path", true, "orders 0.." + std::to_string(options.crossOrderLimit)};
}

CheckResult checkClassification(const CatalanParams &params, const MomentOptions &opts) {
  const auto entries = consistencyChecks(params, opts);
  const ComponentGroup group(params);
  const std::string expected[] = {"R", "C^" + std::to_string((params.p - 1) / 2),
                                  "C^" + std::to_string((params.q - 1) / 2), "C^" + std::to_string(params.g)};
  const int fs[] = {-1, 0, 0, 0};
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto &e = entries[k];
    if (!e.ok()) return {"classification", false, "moment cross-check failed over " + e.label};
    auto text = formatAlgebra(fixedAlgebra(group, e.subfield));
    if (text == "C") text = "C^1";
    if (text != expected[k]) return {"classification", false, e.label + " gives " + text};
    if (e.fsMoment != fs[k]) return {"classification", false, "fs over " + e.label};
  }
  return {"classification", true, "R, C^(p-1)/2, C^(q-1)/2, C^g"};
}

CheckResult checkRosati(const CatalanParams &params) {
  const int pos = rosatiPositivity(params.g);
  return {"Rosati positivity", pos == 2 * params.g, std::to_string(pos) + " positive directions"};
}

CheckResult checkPointCounts(const CatalanParams &params, const VerifyOptions &options) {
  std::size_t checked = 0;
  for (auto ell : primesUpTo(options.pointCountBound)) {
    if (!isGoodPrime(params, ell)) continue;
    const auto n1 = countPointsPrime(params, ell);
    if (n1 != countPointsPrimeTabulated(params, ell))
      return {"point counts", false, "shortcut disagrees at " + std::to_string(ell)};
    PrimeTrace t{ell, n1, std::nullopt};
    if (!satisfiesWeilBound(params, t)) return {"point counts", false, "Weil bound fails at " + std::to_string(ell)};
    if (t.t1() != 0 && (ell - 1) % params.pq() != 0)
      return {"point counts", false, "nonzero trace at non-split " + std::to_string(ell)};
    ++checked;
  }
  return {"point counts", true, std::to_string(checked) + " primes"};
}

CheckResult checkJacobi(const CatalanParams &params, const VerifyOptions &options) {
  std::size_t checked = 0;
  for (auto ell : primesUpTo(options.pointCountBound)) {
    if (checked >= options.jacobiPrimeLimit) break;
    if ((ell - 1) % params.pq() != 0 || !isGoodPrime(params, ell)) continue;
    const auto trace = computePrimeTrace(params, ell, true, options.pointCountBound);
    const auto poly = lpolySplitJacobi(params, ell);
    if (poly[0] != 1 || poly[1] != lpolyC1(trace) || poly[2] != *lpolyC2(trace))
      return {"Jacobi sums", false, "mismatch at " + std::to_string(ell)};
    ++checked;
  }
  return {"Jacobi sums", true, std::to_string(checked) + " split primes"};
}

} // namespace

std::vector<CheckResult> runInvariantSuite(const CatalanParams &params, const VerifyOptions &options,
                                           const std::function<void(const CheckResult &)> &onResult) {
  std::vector<CheckResult> results;
  auto run = [&](const std::string &name, auto &&check) {
    CheckResult r;
    try {
      r = check();
    } catch (const std::exception &e) {
      r = {name, false, e.what()};
    }
    if (onResult) onResult(r);
    results.push_back(std::move(r));
  };
  const ComponentGroup group(params);
  run("basis", [&] { return checkBasis(params); });
  run("generator orders", [&] { return checkGenerators(params); });
  run("component group", [&] { return checkGroup(group); });
  run("conjugation coherence", [&] { return checkCoherence(group); });
  run("fixed-point criterion", [&] { return checkFixedPoints(group); });
  run("(T^2+1)^g element", [&] { return checkMiddleElement(group); });
  run("b_1 vanishing", [&] { return checkTraceVanishing(group, options.moments); });
  run("mu_1 fast path", [&] { return checkMoments(group, options); });
  run("classification", [&] { return checkClassification(params, options.moments); });
  run("Rosati positivity", [&] { return checkRosati(params); });
  run("point counts", [&] { return checkPointCounts(params, options); });
  run("Jacobi sums", [&] { return checkJacobi(params, options); });
  return results;
}

} // namespace catalan
