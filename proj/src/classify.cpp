#include "catalan/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "catalan/errors.hpp"

namespace catalan {

int AlgebraFactor::realDimension() const {
  const int s2 = size * size;
  switch (base) {
  case DivisionAlgebra::R: return s2;
  case DivisionAlgebra::H: return 4 * s2;
  case DivisionAlgebra::C: return 2 * s2;
  }
  return 0;
}

int realDimension(const Algebra &algebra) {
  int dim = 0;
  for (const auto &f : algebra) dim += f.realDimension();
  return dim;
}

int frobeniusSchur(const Algebra &algebra) {
  int fs = 0;
  for (const auto &f : algebra) {
    if (f.base == DivisionAlgebra::R) fs -= f.size;
    if (f.base == DivisionAlgebra::H) fs += 2 * f.size;
  }
  return fs;
}

std::string formatAlgebra(const Algebra &algebra) {
  if (algebra.empty()) return "0";
  std::vector<std::pair<AlgebraFactor, int>> runs;
  for (const auto &f : algebra) {
    if (!runs.empty() && runs.back().first == f)
      ++runs.back().second;
    else
      runs.emplace_back(f, 1);
  }
  std::string out;
  for (const auto &[f, count] : runs) {
    if (!out.empty()) out += " x ";
    const char *base = f.base == DivisionAlgebra::R ? "R" : (f.base == DivisionAlgebra::H ? "H" : "C");
    out += f.size == 1 ? std::string(base) : "M_" + std::to_string(f.size) + "(" + base + ")";
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out;
}

namespace {

int asInteger(const Rational &value, const std::string &what) {
  if (denominator(value) != 1) throw ComputationError(what + " is not integral: " + value.str());
  return static_cast<int>(numerator(value));
}

} // namespace

int rankEndo(const CatalanParams &params, Subfield field) {
  return asInteger(momentMu1Fast(params, field, 2), "M_2[a_1]");
}

int rankNS(const CatalanParams &params, Subfield field, const MomentOptions &options) {
  return asInteger(m1A2Moment(params, field, options), "M_1[a_2]");
}

std::vector<std::vector<int>> blockOrbits(const ComponentGroup &group, Subfield field) {
  const int g = group.params().g;
  std::vector<int> parent(g + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto &[m, n] : subgroupIndices(group.params(), field)) {
    const auto &b = group.at(m, n).matrix;
    for (int i = 1; i <= g; ++i) parent[find(i)] = find(b.target(i));
  }
  std::map<int, std::vector<int>> byRoot;
  for (int i = 1; i <= g; ++i) byRoot[find(i)].push_back(i);
  std::vector<std::vector<int>> orbits;
  for (auto &[root, orbit] : byRoot) orbits.push_back(std::move(orbit));
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

Algebra fixedAlgebra(const ComponentGroup &group, Subfield field) {
  const auto indices = subgroupIndices(group.params(), field);
  Algebra algebra;
  for (const auto &orbit : blockOrbits(group, field)) {
    bool real = false;
    for (const auto &[m, n] : indices) {
      const auto &b = group.at(m, n).matrix;
      for (int i : orbit)
        if (b.target(i) == i && b.flag(i) == Block::J) real = true;
    }
    algebra.push_back({real ? DivisionAlgebra::R : DivisionAlgebra::C, 1});
  }
  std::sort(algebra.begin(), algebra.end());
  return algebra;
}

EndoReport classifyAlgebra(const ComponentGroup &group, Subfield field, const MomentOptions &options) {
  const auto &params = group.params();
  EndoReport report;
  report.subfield = field;
  report.label = subfieldLabel(params, field);
  report.rankEnd = rankEndo(params, field);
  report.rankNS = asInteger(momentMuI(group, field, 2, 1, options), "M_1[a_2]");
  report.orbits = blockOrbits(group, field);
  report.algebra = fixedAlgebra(group, field);
  report.fs = frobeniusSchur(report.algebra);
  return report;
}

EndoReport classifyAlgebra(const CatalanParams &params, Subfield field, const MomentOptions &options) {
  return classifyAlgebra(ComponentGroup(params), field, options);
}

Eigen::MatrixXi rosatiGram(int g) {
  if (g < 1) throw ValidationError("rosatiGram requires g >= 1");
  const int n = 2 * g;
  Eigen::MatrixXi h = Eigen::MatrixXi::Zero(n, n);
  for (int j = 0; j < g; ++j) {
    h(2 * j, 2 * j + 1) = 1;
    h(2 * j + 1, 2 * j) = -1;
  }
  // For Phi_1 = z E_ii and Phi_2 = w E_jj the trace reduces to
  // z w (H^T)_ij H_ji, with z, w in {1, i}.
  const Eigen::MatrixXi ht = h.transpose();
  const int dim = 2 * n;
  Eigen::MatrixXi gram(dim, dim);
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l) {
      const int i = k / 2, j = l / 2;
      const int imaginary = k % 2 + l % 2;
      const int realPart = imaginary == 0 ? 1 : (imaginary == 2 ? -1 : 0);
      gram(k, l) = realPart * ht(i, j) * h(j, i);
    }
  return gram;
}

int rosatiPositivity(int g) {
  const Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> gram = rosatiGram(g).cast<Rational>();
  return inertia<Rational>(gram)[0];
}

std::vector<Algebra> momentCandidates(int realDim, std::optional<int> fs) {
  std::vector<AlgebraFactor> kinds;
  for (auto base : {DivisionAlgebra::R, DivisionAlgebra::H, DivisionAlgebra::C})
    for (int s = 1; AlgebraFactor{base, s}.realDimension() <= realDim; ++s) kinds.push_back({base, s});

  std::vector<Algebra> out;
  Algebra current;
  std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      if (!fs || frobeniusSchur(current) == *fs) out.push_back(current);
      return;
    }
    for (std::size_t k = from; k < kinds.size(); ++k) {
      const int d = kinds[k].realDimension();
      if (d > remaining) continue;
      current.push_back(kinds[k]);
      extend(k, remaining - d);
      current.pop_back();
    }
  };
  extend(0, realDim);
  for (auto &a : out) std::sort(a.begin(), a.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConsistencyEntry> consistencyChecks(const CatalanParams &params, const MomentOptions &options) {
  const ComponentGroup group(params);
  std::vector<ConsistencyEntry> entries;
  for (auto field : kAllSubfields) {
    const auto report = classifyAlgebra(group, field, options);
    ConsistencyEntry e;
    e.subfield = field;
    e.label = report.label;
    e.rankEnd = report.rankEnd;
    e.rankNS = report.rankNS;
    e.fsMoment = asInteger(s2Moment(params, field, options), "M_1[s_2]");
    e.fsAlgebra = report.fs;
    e.dimensionMatches = realDimension(report.algebra) == report.rankEnd;
    e.fsMatches = e.fsMoment == e.fsAlgebra;
    e.noQuaternionFactors = std::none_of(report.algebra.begin(), report.algebra.end(),
                                         [](const AlgebraFactor &f) { return f.base == DivisionAlgebra::H; });
    e.nsHalfRank = field == Subfield::Q ? report.rankNS == 1 : 2 * report.rankNS == report.rankEnd;
    if (report.rankEnd <= kCandidateRankLimit) {
      e.candidates = momentCandidates(report.rankEnd, e.fsMoment);
      e.candidatesEnumerated = true;
      e.ambiguous = e.candidates.size() > 1;
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

} // namespace catalan
