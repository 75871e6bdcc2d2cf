// Acceptance criteria 1-8. One PASS/FAIL line per criterion; the exit status
// is nonzero only when a criterion fails without a recorded deviation.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catalan/classify.hpp"
#include "catalan/lfunc.hpp"
#include "catalan/moments.hpp"
#include "catalan/stgroup.hpp"
#include "oracles.hpp"

using namespace catalan;

namespace {

// Tolerances.
constexpr double kM2Tolerance = 0.05;      // criterion 5, relative to 1
constexpr double kM4Tolerance = 0.10;      // criterion 5, relative to 21
constexpr double kA2Band = 0.35;           // criterion 6, absolute around 1
constexpr double kDeterminantTol = 1e-9;   // criterion 8
constexpr int kNumericalN = 20;            // criterion 5
constexpr std::uint64_t kA2Bound = 3000;   // criterion 6
constexpr std::uint64_t kJacobiBound = 2000; // criterion 8
constexpr unsigned kWorkers = 4;

struct Outcome {
  bool passed = true;
  std::string detail;
  /// Set when the failure is a recorded deviation rather than a defect.
  std::string deviation;
};

class Recorder {
public:
  void fail(const std::string &what) {
    if (outcome_.passed) outcome_.detail = what;
    outcome_.passed = false;
    ++failures_;
  }
  void check(bool ok, const std::string &what) {
    if (!ok) fail(what);
  }
  Outcome finish(const std::string &summary) {
    if (outcome_.passed) outcome_.detail = summary;
    else if (failures_ > 1) outcome_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
    return outcome_;
  }

private:
  Outcome outcome_;
  int failures_ = 0;
};

std::vector<Rational> ints(std::initializer_list<long long> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(BigInt(v));
  return out;
}

std::string str(const Rational &v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string pairName(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

Outcome criterion1() {
  Recorder r;
  const auto params = CatalanParams::make(5, 3);
  const ComponentGroup group(params);
  struct Table {
    Subfield field;
    std::vector<std::vector<Rational>> rows;
  };
  const std::vector<Table> published{
      {Subfield::Q,
       {ints({1, 0, 1, 0, 21, 0, 640, 0, 23765}),
        ints({1, 1, 8, 76, 1168, 20956, 414284, 8643328, 187416464}),
        ints({1, 0, 13, 0, 11745, 0, 17177080, 0, 31036079585}),
        ints({1, 2, 27, 476, 18391, 689812, 34599990, 1677458008, 91894386279})}},
      {Subfield::QZetaQ,
       {ints({1, 0, 2, 0, 42, 0, 1280, 0, 47530}),
        ints({1, 1, 11, 136, 2263, 41656, 827444, 17282560, 374815319}),
        ints({1, 0, 26, 0, 23490, 0, 34354160, 0, 62072159170}),
        ints({1, 2, 42, 890, 36418, 1377502, 69187410, 3354841408, 183788328258})}},
      {Subfield::QZetaP,
       {ints({1, 0, 4, 0, 84, 0, 2560, 0, 95060}),
        ints({1, 2, 22, 272, 4526, 83312, 1654888, 34565120, 749630638}),
        ints({1, 0, 52, 0, 46980, 0, 68708320, 0, 124144318340}),
        ints({1, 4, 82, 1780, 72830, 2755004, 138374800, 6709682816, 367576656446})}},
      {Subfield::K,
       {ints({1, 0, 8, 0, 168, 0, 5120, 0, 190120}),
        ints({1, 4, 40, 544, 9016, 166624, 3309376, 69130240, 1499256376}),
        ints({1, 0, 104, 0, 93960, 0, 137416640, 0, 248288636680}),
        ints({1, 6, 156, 3528, 145512, 5509296, 276746016, 13419347136, 735153215448})}},
  };

  // Independent oracle for mu_4: principal-minor e_4 per component, powers
  // expanded on an ordered map.
  std::vector<std::vector<BigInt>> e4Powers;
  for (const auto &e : group.elements()) {
    const auto minors = oracle::charPolyByMinors(e.matrix);
    std::vector<BigInt> row;
    for (unsigned n = 0; n <= 8; ++n) row.push_back(oracle::constantTermOfPowerDirect(minors[4], n));
    e4Powers.push_back(row);
  }

  int mu4Mismatches = 0;
  for (const auto &t : published) {
    const auto label = subfieldLabel(params, t.field);
    for (int i = 1; i <= 4; ++i)
      for (unsigned n = 0; n <= 8; ++n) {
        const Rational got = momentMuI(params, t.field, i, n);
        const auto &want = t.rows[i - 1][n];
        if (got == want) continue;
        const std::string where = label + " M_" + std::to_string(n) + "[mu_" + std::to_string(i) +
                                  "] = " + str(got) + ", table " + str(want);
        if (i < 4) {
          r.fail(where);
          continue;
        }
        ++mu4Mismatches;
        BigInt sum = 0;
        const auto indices = subgroupIndices(params, t.field);
        for (auto [m, nn] : indices) sum += e4Powers[m * (params.q - 1) + nn][n];
        const Rational oracle = Rational(sum) / Rational(BigInt(static_cast<long>(indices.size())));
        r.check(got == oracle, where + ", oracle " + str(oracle));
      }
  }
  auto out = r.finish("mu_1..mu_4, n <= 8, four subfields");
  if (out.passed && mu4Mismatches > 0) {
    out.passed = false;
    out.detail = std::to_string(mu4Mismatches) + " mu_4 entries differ from the published tables";
    out.deviation = "mu_1..mu_3 exact; every mu_4 entry equals the principal-minor oracle";
  }
  return out;
}

Outcome criterion2() {
  Recorder r;
  const std::vector<std::tuple<int, int, std::vector<long long>>> rows{
      {5, 3, {1, 21, 640, 23765}},     {7, 3, {1, 33, 1660, 106785}},    {11, 3, {1, 57, 5140, 615545}},
      {13, 3, {1, 69, 7600, 1121925}}, {7, 5, {1, 69, 7600, 1121925}},   {17, 3, {1, 93, 13960, 2840285}},
  };
  for (const auto &[p, q, want] : rows) {
    const auto params = CatalanParams::make(p, q);
    for (int k = 0; k < 4; ++k) {
      const auto got = momentMu1Fast(params, Subfield::Q, 2 * (k + 1));
      r.check(got == Rational(BigInt(want[k])),
              pairName(p, q) + " M_" + std::to_string(2 * (k + 1)) + " = " + str(got));
    }
  }
  return r.finish("six curves, M_2..M_8");
}

BlockSignedPerm literal(std::vector<std::pair<int, char>> spec) {
  std::vector<int> targets;
  std::vector<Block> flags;
  for (auto [t, f] : spec) {
    targets.push_back(t);
    flags.push_back(f == 'I' ? Block::I : Block::J);
  }
  return {targets, flags};
}

Outcome criterion3() {
  Recorder r;
  const auto p53 = CatalanParams::make(5, 3);
  const auto p73 = CatalanParams::make(7, 3);
  r.check(p53.c == 2 && p53.d == 2 && p73.c == 3 && p73.d == 2, "smallest primitive roots");
  r.check(gammaP(p53) == literal({{4, 'J'}, {3, 'I'}, {1, 'J'}, {2, 'I'}}), "gamma_p (5,3)");
  r.check(gammaQ(p53) == literal({{2, 'I'}, {1, 'I'}, {4, 'J'}, {3, 'J'}}), "gamma_q (5,3)");
  r.check(gammaP(p73) == literal({{6, 'J'}, {3, 'J'}, {5, 'I'}, {1, 'J'}, {4, 'I'}, {2, 'J'}}), "gamma_p (7,3)");
  r.check(gammaQ(p73) == literal({{3, 'I'}, {4, 'I'}, {1, 'I'}, {2, 'I'}, {6, 'J'}, {5, 'J'}}), "gamma_q (7,3)");
  return r.finish("(5,3) and (7,3) block-for-block");
}

Outcome criterion4() {
  Recorder r;
  int curves = 0;
  for (auto [p, q] : oracle::primePairs(101)) {
    const auto params = CatalanParams::make(p, q);
    const ComponentGroup group(params);
    const auto name = pairName(p, q);
    r.check(static_cast<int>(group.size()) == (p - 1) * (q - 1), name + " group order");
    const auto alpha = endomorphismAlpha(params);
    const auto basis = buildBasis(params);
    for (const auto &e : group.elements()) {
      const std::int64_t k = oracle::crt(p, q, powMod(params.c, e.m, p), powMod(params.d, e.n, q));
      const auto image = conjugateDiag(e.matrix, alpha);
      for (const auto &el : basis)
        r.check(modPos(image[el.i - 1], params.pq()) == modPos(k * el.e, params.pq()),
                name + " coherence at (" + std::to_string(e.m) + "," + std::to_string(e.n) + ")");
    }
    const auto poly = charPolySymbolic(group.at((p - 1) / 2, (q - 1) / 2).matrix);
    for (int j = 0; j <= 2 * params.g; ++j)
      r.check(poly[j] == (j % 2 ? LaurentPoly() : LaurentPoly(BigInt(binomial(params.g, j / 2)))),
              name + " (T^2+1)^g coefficient " + std::to_string(j));
    ++curves;
  }
  return r.finish(std::to_string(curves) + " curves with pq <= 100");
}

Outcome criterion5() {
  NumericalOptions opts;
  opts.workers = kWorkers;
  const auto result = numericalMoments(CatalanParams::make(5, 3), kNumericalN, {2, 4}, Coefficient::A1, opts);
  const double m2 = result.moments.at(2), m4 = result.moments.at(4);
  std::ostringstream detail;
  detail << "N = " << kNumericalN << ": M_2 = " << m2 << ", M_4 = " << m4;
  Outcome out;
  out.detail = detail.str();
  out.passed = std::abs(m2 - 1.0) <= kM2Tolerance && std::abs(m4 - 21.0) <= kM4Tolerance * 21.0;
  return out;
}

Outcome criterion6() {
  NumericalOptions opts;
  opts.workers = kWorkers;
  const auto result = numericalMomentsUpTo(CatalanParams::make(5, 3), kA2Bound, {1}, Coefficient::A2, opts);
  const double m1 = result.moments.at(1);
  std::ostringstream detail;
  detail << "ell <= " << kA2Bound << ": M_1[a_2] = " << m1;
  Outcome out;
  out.detail = detail.str();
  out.passed = std::abs(m1 - 1.0) <= kA2Band;
  return out;
}

Algebra complexPower(int m) { return Algebra(static_cast<std::size_t>(m), {DivisionAlgebra::C, 1}); }

Outcome criterion7() {
  Recorder r;
  int curves = 0;
  for (auto [p, q] : oracle::primePairs(101)) {
    const auto params = CatalanParams::make(p, q);
    const ComponentGroup group(params);
    const auto name = pairName(p, q);
    const std::array<Algebra, 4> algebras{Algebra{{DivisionAlgebra::R, 1}}, complexPower((p - 1) / 2),
                                          complexPower((q - 1) / 2), complexPower(params.g)};
    const std::array<int, 4> ranks{1, p - 1, q - 1, (p - 1) * (q - 1)};
    const std::array<int, 4> fs{-1, 0, 0, 0};
    for (std::size_t f = 0; f < std::size(kAllSubfields); ++f) {
      const auto report = classifyAlgebra(group, kAllSubfields[f]);
      const auto where = name + " " + report.label;
      r.check(report.algebra == algebras[f], where + " algebra " + formatAlgebra(report.algebra));
      r.check(report.rankEnd == ranks[f], where + " rank " + std::to_string(report.rankEnd));
      r.check(report.fs == fs[f], where + " fs " + std::to_string(report.fs));
      r.check(s2Moment(params, kAllSubfields[f]) == Rational(fs[f]), where + " M_1[s_2]");
    }
    ++curves;
  }
  for (int g = 1; g <= 16; ++g)
    r.check(rosatiPositivity(g) == 2 * g, "Rosati positivity g = " + std::to_string(g));
  return r.finish(std::to_string(curves) + " curves, Rosati g <= 16");
}

Outcome criterion8() {
  Recorder r;
  int split = 0;
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::acos(-1.0));
  for (auto [p, q] : {std::pair{5, 3}, std::pair{7, 3}}) {
    const auto params = CatalanParams::make(p, q);
    const auto name = pairName(p, q);
    for (auto ell : primesUpTo(kJacobiBound - 1)) {
      if ((ell - 1) % params.pq() != 0) continue;
      const auto trace = computePrimeTrace(params, ell, true);
      const auto poly = lpolySplitJacobi(params, ell);
      r.check(poly[1] == lpolyC1(trace) && poly[2] == *lpolyC2(trace), name + " ell = " + std::to_string(ell));
      ++split;
    }
    const ComponentGroup group(params);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto &b = group.elements()[pick(rng)].matrix;
      std::vector<std::complex<double>> units;
      for (int j = 0; j < params.g; ++j) units.push_back(std::polar(1.0, angle(rng)));
      const Eigen::MatrixXcd m = twistedMatrix<std::complex<double>>(b, units);
      const auto poly = charPolySymbolic(b);
      const std::complex<double> t = std::polar(1.3, angle(rng));
      const Eigen::MatrixXcd shifted = t * Eigen::MatrixXcd::Identity(m.rows(), m.cols()) - m;
      std::complex<double> value = 0;
      for (int k = 0; k <= poly.degree(); ++k) value += poly[k].evaluate(units) * std::pow(t, poly.degree() - k);
      r.check(std::abs(value - shifted.determinant()) < kDeterminantTol * std::max(1.0, std::abs(value)),
              name + " determinant trial " + std::to_string(trial));
    }
  }
  return r.finish(std::to_string(split) + " split primes, 40 determinant trials");
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"theoretical moment tables (5,3)", criterion1},
      {"mu_1 rows over Q", criterion2},
      {"component generators", criterion3},
      {"group structure pq <= 100", criterion4},
      {"numerical a_1 moments (5,3)", criterion5},
      {"numerical M_1[a_2] (5,3)", criterion6},
      {"classifier", criterion7},
      {"oracle equivalence", criterion8},
  };
  int undocumented = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception &ex) {
      out.passed = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s", out.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), out.detail.c_str());
    if (!out.passed && !out.deviation.empty()) std::printf(" [documented deviation: %s]", out.deviation.c_str());
    std::printf(" (%.1f s)\n", seconds);
    std::fflush(stdout);
    if (!out.passed && out.deviation.empty()) ++undocumented;
  }
  return undocumented == 0 ? 0 : 1;
}
