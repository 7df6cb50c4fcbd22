#pragma once

#include <string>

#include <json.hpp>

#include "berklim/complexverify.hpp"
#include "berklim/dynamics.hpp"
#include "berklim/limits.hpp"
#include "berklim/sncmodel.hpp"

namespace berklim {

using Json = nlohmann::json;

// Exact rationals serialize as [num, den].
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// { "e": int, "terms": [[num, den, re, im], ...], "prec": [num, den] }
Json series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const Json& j);

// { "type": 1, "value": series | "inf" } or
// { "type": 2, "center": series, "q": [num, den] }
Json point_to_json(const BerkPoint& p);
BerkPoint point_from_json(const Json& j);

// { "num": [series, ...], "den": [series, ...] }, ascending coefficients.
Json map_to_json(const RationalMapK& f);
RationalMapK map_from_json(const Json& j);

// { "divisors": [ { "name": str, "eta": point, "mult": int } ] }
Json model_to_json(const SncModel& X);
SncModel model_from_json(const Json& j);

Json weighted_points_to_json(const WeightedPointSet& S);
Json measure_to_json(const AtomicMeasure& m, const SncModel& X);
Json node_mass_report_to_json(const NodeMassReport& r, const SncModel& X);
Json span_agreement_to_json(const SpanAgreementReport& r);
Json convergence_to_json(const ConvergenceTable& t, const SncModel& X);

std::string measure_to_csv(const AtomicMeasure& m, const SncModel& X,
                           const std::string& model_name);
std::string convergence_to_csv(const ConvergenceTable& t, const SncModel& X);

// Graphviz exports.
std::string span_tree_to_dot(const SpanTree& tree);
std::string dual_graph_to_dot(const SncModel& X);

}  // namespace berklim
