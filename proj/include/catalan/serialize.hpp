#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "catalan/classify.hpp"
#include "catalan/lfunc.hpp"
#include "catalan/moments.hpp"

namespace catalan {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exact rationals are emitted as strings ("21", "3/2").
std::string rationalString(const Rational &value);

Json paramsJson(const CatalanParams &params);
Json blockMatrixJson(const BlockSignedPerm &b);
Json groupJson(const ComponentGroup &group);
Json momentTableJson(const CatalanParams &params, const MomentTable &table);
Json algebraJson(const Algebra &algebra);
Json endoReportJson(const EndoReport &report);
Json consistencyJson(const std::vector<ConsistencyEntry> &entries);
Json numericalJson(const NumericalResult &result);

/// {"schemaVersion": ..., "command": ..., <body fields>}.
Json document(const std::string &command, const Json &body);

std::string groupText(const ComponentGroup &group);
/// Rows "M[mu_i] = (1, ...)" aligned on the '=' sign.
std::string momentTableText(const CatalanParams &params, const MomentTable &table);
std::string endoReportText(const std::vector<EndoReport> &reports);
std::string consistencyText(const std::vector<ConsistencyEntry> &entries);
std::string numericalText(const NumericalResult &result);

} // namespace catalan
