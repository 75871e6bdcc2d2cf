#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalan/classify.hpp"
#include "catalan/errors.hpp"
#include "catalan/lfunc.hpp"
#include "catalan/serialize.hpp"
#include "catalan/verify.hpp"

using namespace catalan;

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kComputation = 2, kVerification = 3 };

struct RunConfig {
  int p = 0;
  int q = 0;
  std::optional<int> c;
  std::optional<int> d;
  std::string format = "table";
  unsigned workers = 1;

  // moments
  unsigned nmax = 8;
  std::optional<int> maxIndex;
  std::vector<std::string> subfields;
  std::size_t termBudget = kDefaultTermBudget;

  // numerical
  int N = 16;
  std::optional<std::uint64_t> maxPrime;
  std::vector<int> orders{2, 4, 6, 8};
  std::string coeff = "a1";
  std::optional<std::string> cacheDir;
  std::uint64_t ext2Cap = kDefaultExt2Cap;
  bool exact = false;

  // verify
  std::uint64_t primeBound = 2000;

  CatalanParams params() const { return CatalanParams::make(p, q, c, d); }
  bool json() const { return format == "json"; }

  MomentOptions momentOptions() const { return {termBudget, workers}; }

  NumericalOptions numericalOptions() const {
    NumericalOptions opts;
    opts.workers = workers;
    if (cacheDir) {
      opts.cacheDir = *cacheDir;
    } else if (const char *env = std::getenv("CATALAN_CACHE_DIR"); env && *env) {
      opts.cacheDir = env;
    }
    opts.ext2Cap = ext2Cap;
    opts.exactMoments = exact;
    opts.warn = [](const std::string &msg) { std::cerr << "warning: " << msg << "\n"; };
    return opts;
  }
};

void addCommon(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--p", cfg.p, "odd prime p of y^q = x^p - 1")->required();
  cmd->add_option("--q", cfg.q, "odd prime q of y^q = x^p - 1")->required();
  cmd->add_option("--c", cfg.c, "primitive root mod p (default: smallest)");
  cmd->add_option("--d", cfg.d, "primitive root mod q (default: smallest)");
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1u, 256u));
}

void addMomentOptions(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--nmax", cfg.nmax, "highest moment order")->check(CLI::Range(0u, 64u));
  cmd->add_option("--max-index", cfg.maxIndex, "compute mu_1..mu_i (default min(4, g))");
  cmd->add_option("--subfield", cfg.subfields, "Q, Q(zeta_p), Q(zeta_q), Q(zeta_pq) or numeric labels");
  cmd->add_option("--budget", cfg.termBudget, "Laurent term budget");
}

void addNumericalOptions(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--N", cfg.N, "primes up to 2^N")->check(CLI::Range(1, 31));
  cmd->add_option("--max-prime", cfg.maxPrime, "explicit prime bound (overrides --N)");
  cmd->add_option("--orders", cfg.orders, "moment orders")->delimiter(',');
  cmd->add_option("--coeff", cfg.coeff, "normalized coefficient")->check(CLI::IsMember({"a1", "a2"}));
  cmd->add_option("--cache-dir", cfg.cacheDir, "trace cache directory (env CATALAN_CACHE_DIR)");
  cmd->add_option("--ext2-cap", cfg.ext2Cap, "largest prime counted over F_{ell^2}");
  cmd->add_flag("--exact", cfg.exact, "also report exact rational moments");
}

std::vector<Subfield> selectedSubfields(const RunConfig &cfg, const CatalanParams &params) {
  if (cfg.subfields.empty()) return {std::begin(kAllSubfields), std::end(kAllSubfields)};
  std::vector<Subfield> out;
  for (const auto &s : cfg.subfields) out.push_back(parseSubfield(params, s));
  return out;
}

std::string emit(const RunConfig &cfg, const std::string &command, const Json &body, const std::string &text) {
  return cfg.json() ? document(command, body).dump(2) + "\n" : text;
}

std::string cmdGroup(const RunConfig &cfg) {
  const auto params = cfg.params();
  const ComponentGroup group(params);
  return emit(cfg, "group", groupJson(group), groupText(group));
}

std::pair<Json, std::string> momentsBody(const RunConfig &cfg, const CatalanParams &params) {
  const int maxIndex = cfg.maxIndex.value_or(std::min(4, params.g));
  if (maxIndex < 1 || maxIndex > params.g) throw ValidationError("--max-index must lie in [1, g]");
  const auto fields = selectedSubfields(cfg, params);
  const ComponentGroup group(params);
  Json tables = Json::array();
  std::string text;
  for (auto field : fields) {
    const auto table = momentTable(group, field, maxIndex, cfg.nmax, cfg.momentOptions());
    if (!table.isIntegral()) throw ComputationError("non-integral moment over " + subfieldLabel(params, field));
    tables.push_back(momentTableJson(params, table));
    text += momentTableText(params, table);
  }
  Json body = paramsJson(params);
  body["tables"] = std::move(tables);
  return {body, text};
}

std::string cmdMoments(const RunConfig &cfg) {
  const auto params = cfg.params();
  const auto [body, text] = momentsBody(cfg, params);
  return emit(cfg, "moments", body, text);
}

NumericalResult runNumerical(const RunConfig &cfg, const CatalanParams &params) {
  const auto coeff = cfg.coeff == "a2" ? Coefficient::A2 : Coefficient::A1;
  if (cfg.maxPrime) return numericalMomentsUpTo(params, *cfg.maxPrime, cfg.orders, coeff, cfg.numericalOptions());
  return numericalMoments(params, cfg.N, cfg.orders, coeff, cfg.numericalOptions());
}

std::string cmdNumerical(const RunConfig &cfg) {
  const auto params = cfg.params();
  const auto result = runNumerical(cfg, params);
  return emit(cfg, "numerical", numericalJson(result), numericalText(result));
}

std::pair<Json, std::string> classifyBody(const RunConfig &cfg, const CatalanParams &params) {
  const ComponentGroup group(params);
  std::vector<EndoReport> reports;
  Json jr = Json::array();
  for (auto field : kAllSubfields) {
    reports.push_back(classifyAlgebra(group, field, cfg.momentOptions()));
    jr.push_back(endoReportJson(reports.back()));
  }
  const auto checks = consistencyChecks(params, cfg.momentOptions());
  const int rosati = rosatiPositivity(params.g);
  Json body = paramsJson(params);
  body["reports"] = std::move(jr);
  body["consistency"] = consistencyJson(checks);
  body["rosatiPositive"] = rosati;
  std::string text = endoReportText(reports) + "\n" + consistencyText(checks) +
                     "Rosati form: " + std::to_string(rosati) + " positive directions (2g = " +
                     std::to_string(2 * params.g) + ")\n";
  return {body, text};
}

std::string cmdClassify(const RunConfig &cfg) {
  const auto params = cfg.params();
  const auto [body, text] = classifyBody(cfg, params);
  return emit(cfg, "classify", body, text);
}

std::string cmdVerify(const RunConfig &cfg, bool &allPassed) {
  const auto params = cfg.params();
  VerifyOptions opts;
  opts.moments = cfg.momentOptions();
  opts.pointCountBound = cfg.primeBound;
  const auto results = runInvariantSuite(params, opts);
  Json checks = Json::array();
  std::string text;
  allPassed = true;
  for (const auto &r : results) {
    allPassed = allPassed && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
  }
  Json body = paramsJson(params);
  body["checks"] = std::move(checks);
  body["allPassed"] = allPassed;
  return emit(cfg, "verify", body, text);
}

std::string cmdReport(const RunConfig &cfg) {
  const auto params = cfg.params();
  const ComponentGroup group(params);
  const auto [momentsJ, momentsT] = momentsBody(cfg, params);
  const auto [classifyJ, classifyT] = classifyBody(cfg, params);
  const auto numerical = runNumerical(cfg, params);
  Json body = paramsJson(params);
  body["group"] = groupJson(group);
  body["moments"] = momentsJ["tables"];
  body["classify"] = classifyJ;
  body["numerical"] = numericalJson(numerical);
  const std::string text = "== group\n" + groupText(group) + "\n== moments\n" + momentsT + "\n== classify\n" +
                           classifyT + "\n== numerical\n" + numericalText(numerical);
  return emit(cfg, "report", body, text);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sato-Tate groups and endomorphism types of Catalan Jacobians y^q = x^p - 1"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *group = app.add_subcommand("group", "component-group generators gamma_p, gamma_q");
  addCommon(group, cfg);
  auto *moments = app.add_subcommand("moments", "exact moment tables per subfield");
  addCommon(moments, cfg);
  addMomentOptions(moments, cfg);
  auto *numerical = app.add_subcommand("numerical", "moments of normalized L-polynomial coefficients");
  addCommon(numerical, cfg);
  addNumericalOptions(numerical, cfg);
  auto *classify = app.add_subcommand("classify", "real endomorphism algebra per subfield");
  addCommon(classify, cfg);
  classify->add_option("--budget", cfg.termBudget, "Laurent term budget");
  auto *verify = app.add_subcommand("verify", "invariant suite with pass/fail summary");
  addCommon(verify, cfg);
  verify->add_option("--prime-bound", cfg.primeBound, "bound for point-count checks");
  auto *report = app.add_subcommand("report", "group, moments, classify and numerical in one document");
  addCommon(report, cfg);
  addMomentOptions(report, cfg);
  addNumericalOptions(report, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kValidation;
  }

  try {
    std::string out;
    int code = kOk;
    if (*group) out = cmdGroup(cfg);
    if (*moments) out = cmdMoments(cfg);
    if (*numerical) out = cmdNumerical(cfg);
    if (*classify) out = cmdClassify(cfg);
    if (*verify) {
      bool passed = false;
      out = cmdVerify(cfg, passed);
      if (!passed) code = kVerification;
    }
    if (*report) out = cmdReport(cfg);
    std::cout << out;
    return code;
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
}
