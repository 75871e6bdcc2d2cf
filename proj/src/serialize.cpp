#include "catalan/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace catalan {

std::string rationalString(const Rational &value) {
  if (denominator(value) == 1) return numerator(value).str();
  return value.str();
}

Json paramsJson(const CatalanParams &params) {
  return {{"p", params.p}, {"q", params.q}, {"c", params.c}, {"d", params.d}, {"g", params.g}};
}

Json blockMatrixJson(const BlockSignedPerm &b) {
  Json rows = Json::array();
  for (int i = 1; i <= b.size(); ++i)
    rows.push_back({{"row", i}, {"column", b.target(i)}, {"block", b.flag(i) == Block::I ? "I" : "J"}});
  return rows;
}

Json groupJson(const ComponentGroup &group) {
  const auto &params = group.params();
  Json body = paramsJson(params);
  body["gammaP"] = blockMatrixJson(gammaP(params));
  body["gammaQ"] = blockMatrixJson(gammaQ(params));
  body["componentCount"] = group.size();
  Json elements = Json::array();
  for (const auto &e : group.elements())
    elements.push_back({{"m", e.m}, {"n", e.n}, {"matrix", blockMatrixJson(e.matrix)}});
  body["components"] = std::move(elements);
  return body;
}

Json momentTableJson(const CatalanParams &params, const MomentTable &table) {
  Json rows = Json::object();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    Json row = Json::array();
    for (const auto &v : table.rows[i]) row.push_back(rationalString(v));
    rows["mu_" + std::to_string(i + 1)] = std::move(row);
  }
  return {{"subfield", subfieldTag(table.subfield)},
          {"label", subfieldLabel(params, table.subfield)},
          {"componentCount", subgroupOrder(params, table.subfield)},
          {"moments", std::move(rows)}};
}

Json algebraJson(const Algebra &algebra) {
  Json factors = Json::array();
  for (const auto &f : algebra) {
    const char *base = f.base == DivisionAlgebra::R ? "R" : (f.base == DivisionAlgebra::H ? "H" : "C");
    factors.push_back({{"base", base}, {"size", f.size}});
  }
  return {{"text", formatAlgebra(algebra)}, {"realDimension", realDimension(algebra)}, {"factors", factors}};
}

Json endoReportJson(const EndoReport &report) {
  return {{"subfield", subfieldTag(report.subfield)},
          {"label", report.label},
          {"rankEnd", report.rankEnd},
          {"rankNS", report.rankNS},
          {"fs", report.fs},
          {"algebra", algebraJson(report.algebra)},
          {"orbits", report.orbits}};
}

Json consistencyJson(const std::vector<ConsistencyEntry> &entries) {
  Json out = Json::array();
  for (const auto &e : entries) {
    Json candidates = Json::array();
    for (const auto &c : e.candidates) candidates.push_back(formatAlgebra(c));
    out.push_back({{"subfield", subfieldTag(e.subfield)},
                   {"label", e.label},
                   {"rankEnd", e.rankEnd},
                   {"rankNS", e.rankNS},
                   {"fsMoment", e.fsMoment},
                   {"fsAlgebra", e.fsAlgebra},
                   {"dimensionMatches", e.dimensionMatches},
                   {"fsMatches", e.fsMatches},
                   {"noQuaternionFactors", e.noQuaternionFactors},
                   {"nsHalfRank", e.nsHalfRank},
                   {"candidatesEnumerated", e.candidatesEnumerated},
                   {"momentCandidates", std::move(candidates)},
                   {"ambiguous", e.ambiguous},
                   {"ok", e.ok()}});
  }
  return out;
}

Json numericalJson(const NumericalResult &result) {
  Json moments = Json::object();
  for (const auto &[n, v] : result.moments) moments[std::to_string(n)] = v;
  Json body = {{"p", result.p}, {"q", result.q}};
  body["N"] = result.N ? Json(*result.N) : Json(nullptr);
  body["bound"] = result.bound;
  body["coeff"] = coefficientName(result.coeff);
  body["moments"] = std::move(moments);
  if (!result.exactMoments.empty()) {
    Json exact = Json::object();
    for (const auto &[n, v] : result.exactMoments) exact[std::to_string(n)] = rationalString(v);
    body["exactMoments"] = std::move(exact);
  }
  body["primeCount"] = result.primeCount;
  body["splitPrimeCount"] = result.splitPrimeCount;
  body["badPrimesSkipped"] = result.badPrimesSkipped;
  return body;
}

Json document(const std::string &command, const Json &body) {
  Json doc = {{"schemaVersion", kSchemaVersion}, {"command", command}};
  for (const auto &[key, value] : body.items()) doc[key] = value;
  return doc;
}

std::string groupText(const ComponentGroup &group) {
  const auto &params = group.params();
  std::ostringstream out;
  out << "(p,q) = (" << params.p << "," << params.q << "), c = " << params.c << ", d = " << params.d
      << ", g = " << params.g << "\n\n";
  out << "gamma_p:\n" << formatBlockMatrix(gammaP(params)) << "\n";
  out << "gamma_q:\n" << formatBlockMatrix(gammaQ(params)) << "\n";
  out << "components: " << group.size() << "\n";
  return out.str();
}

std::string momentTableText(const CatalanParams &params, const MomentTable &table) {
  std::ostringstream out;
  out << "over " << subfieldLabel(params, table.subfield) << " (" << subgroupOrder(params, table.subfield)
      << " components)\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << "  M[mu_" << i + 1 << "] = (";
    for (std::size_t n = 0; n < table.rows[i].size(); ++n)
      out << (n ? ", " : "") << rationalString(table.rows[i][n]);
    out << ")\n";
  }
  return out.str();
}

std::string endoReportText(const std::vector<EndoReport> &reports) {
  std::ostringstream out;
  out << std::left << std::setw(14) << "field" << std::setw(8) << "rkEnd" << std::setw(7) << "rkNS"
      << std::setw(5) << "fs" << "End_R\n";
  for (const auto &r : reports)
    out << std::setw(14) << r.label << std::setw(8) << r.rankEnd << std::setw(7) << r.rankNS << std::setw(5)
        << r.fs << formatAlgebra(r.algebra) << "\n";
  return out.str();
}

std::string consistencyText(const std::vector<ConsistencyEntry> &entries) {
  std::ostringstream out;
  for (const auto &e : entries) {
    out << (e.ok() ? "ok   " : "FAIL ") << std::left << std::setw(14) << e.label << "fs " << e.fsMoment
        << " (algebra " << e.fsAlgebra << ")";
    if (e.candidatesEnumerated) {
      out << ", moment candidates:";
      for (const auto &c : e.candidates) out << " [" << formatAlgebra(c) << "]";
      if (e.ambiguous) out << " (ambiguous, decided by orbits)";
    }
    out << "\n";
  }
  return out.str();
}

std::string numericalText(const NumericalResult &result) {
  std::ostringstream out;
  out << "(p,q) = (" << result.p << "," << result.q << "), " << coefficientName(result.coeff)
      << ", primes <= " << result.bound << ": " << result.primeCount << " good (" << result.splitPrimeCount
      << " split, " << result.badPrimesSkipped << " bad skipped)\n";
  out << std::setprecision(6) << std::fixed;
  for (const auto &[n, v] : result.moments) out << "  M_" << n << " = " << v << "\n";
  return out.str();
}

} // namespace catalan
