#include "berklim/json_io.hpp"

#include <sstream>

namespace berklim {

namespace {

Error schema_error(const std::string& what) {
  return Error(ErrorKind::InvalidInput, "schema: " + what);
}

}  // namespace

Json rat_to_json(const Rat& r) {
  return Json::array({r.numerator(), r.denominator()});
}

Rat rat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw schema_error("rational must be [num, den]");
  long long den = j[1].get<long long>();
  if (den == 0) throw schema_error("rational with zero denominator");
  return Rat(j[0].get<long long>(), den);
}

Json series_to_json(const PuiseuxSeries& s) {
  Json terms = Json::array();
  for (const auto& [ex, c] : s.terms())
    terms.push_back(Json::array(
        {ex.numerator(), ex.denominator(), c.real(), c.imag()}));
  return Json{{"e", s.ramification()},
              {"terms", std::move(terms)},
              {"prec", rat_to_json(s.precision())}};
}

PuiseuxSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.contains("prec"))
    throw schema_error("series needs 'terms' and 'prec'");
  std::map<Rat, Complex> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 4)
      throw schema_error("series term must be [num, den, re, im]");
    Rat ex(t[0].get<long long>(), t[1].get<long long>());
    terms[ex] = Complex(t[2].get<double>(), t[3].get<double>());
  }
  long long e = j.value("e", 1);
  return PuiseuxSeries::from_terms(e, std::move(terms), rat_from_json(j["prec"]));
}

Json point_to_json(const BerkPoint& p) {
  if (p.is_infinity()) return Json{{"type", 1}, {"value", "inf"}};
  if (p.is_type1()) return Json{{"type", 1}, {"value", series_to_json(p.value())}};
  return Json{{"type", 2},
              {"center", series_to_json(p.center())},
              {"q", rat_to_json(p.q())}};
}

BerkPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw schema_error("point needs 'type'");
  int type = j["type"].get<int>();
  if (type == 1) {
    if (!j.contains("value")) throw schema_error("type-1 point needs 'value'");
    if (j["value"].is_string()) {
      if (j["value"].get<std::string>() != "inf")
        throw schema_error("type-1 string value must be 'inf'");
      return BerkPoint::infinity();
    }
    return BerkPoint::type1(series_from_json(j["value"]));
  }
  if (type == 2) {
    if (!j.contains("center") || !j.contains("q"))
      throw schema_error("type-2 point needs 'center' and 'q'");
    return BerkPoint::type2(series_from_json(j["center"]), rat_from_json(j["q"]));
  }
  throw schema_error("point type must be 1 or 2");
}

Json map_to_json(const RationalMapK& f) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : f.num()) num.push_back(series_to_json(c));
  for (const auto& c : f.den()) den.push_back(series_to_json(c));
  return Json{{"num", std::move(num)}, {"den", std::move(den)}};
}

RationalMapK map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw schema_error("map needs 'num' and 'den' coefficient arrays");
  PSPoly num, den;
  for (const auto& c : j["num"]) num.push_back(series_from_json(c));
  for (const auto& c : j["den"]) den.push_back(series_from_json(c));
  return RationalMapK(std::move(num), std::move(den));
}

Json model_to_json(const SncModel& X) {
  Json divisors = Json::array();
  for (const auto& d : X.divisors())
    divisors.push_back(Json{{"name", d.name},
                            {"eta", point_to_json(d.eta)},
                            {"mult", d.multiplicity}});
  return Json{{"divisors", std::move(divisors)}};
}

SncModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("divisors"))
    throw schema_error("model needs 'divisors'");
  std::vector<Divisor> ds;
  for (const auto& dj : j["divisors"]) {
    Divisor d;
    d.name = dj.value("name", "");
    d.eta = point_from_json(dj.at("eta"));
    d.multiplicity = dj.value("mult", 1);
    ds.push_back(std::move(d));
  }
  return SncModel::create(std::move(ds));
}

Json weighted_points_to_json(const WeightedPointSet& S) {
  Json pts = Json::array();
  for (const auto& [p, mass] : S.points)
    pts.push_back(Json{{"point", point_to_json(p)}, {"mass", rat_to_json(mass)}});
  return Json{{"depth", S.depth},
              {"seed", point_to_json(S.seed)},
              {"stochastic", S.stochastic},
              {"prng_seed", S.prng_seed},
              {"points", std::move(pts)}};
}

namespace {

Json target_to_json(const ReductionTarget& t, const SncModel& X) {
  switch (t.kind) {
    case ReductionTarget::Kind::Generic:
      return Json{{"kind", "generic"}, {"component", X.divisors()[t.i].name}};
    case ReductionTarget::Kind::Smooth: {
      Json label;
      if (t.label.is_inf)
        label = "inf";
      else
        label = Json::array({t.label.value.real(), t.label.value.imag()});
      return Json{{"kind", "smooth"},
                  {"component", X.divisors()[t.i].name},
                  {"label", std::move(label)}};
    }
    case ReductionTarget::Kind::Node:
      return Json{{"kind", "node"},
                  {"components", Json::array({X.divisors()[t.i].name,
                                              X.divisors()[t.j].name})}};
  }
  throw schema_error("unknown target kind");
}

}  // namespace

Json measure_to_json(const AtomicMeasure& m, const SncModel& X) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms)
    atoms.push_back(Json{{"target", target_to_json(a.target, X)},
                         {"mass", rat_to_json(a.mass)}});
  return Json{{"atoms", std::move(atoms)},
              {"provenance",
               Json{{"depth", m.depth},
                    {"stochastic", m.stochastic},
                    {"prng_seed", m.prng_seed}}}};
}

Json node_mass_report_to_json(const NodeMassReport& r, const SncModel& X) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"target", target_to_json(row.target, X)},
                        {"measured", rat_to_json(row.measured)},
                        {"expected", rat_to_json(row.expected)},
                        {"discrepancy", rat_to_json(row.discrepancy)}});
  return Json{{"rows", std::move(rows)}, {"all_exact", r.all_exact}};
}

Json span_agreement_to_json(const SpanAgreementReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"candidate", point_to_json(row.candidate)},
                        {"in_S", row.in_S},
                        {"on_span", row.on_span}});
  return Json{{"rows", std::move(rows)},
              {"agreement", r.agreement},
              {"witnesses", r.witnesses}};
}

Json convergence_to_json(const ConvergenceTable& t, const SncModel& X) {
  Json rows = Json::array();
  for (const auto& row : t.rows)
    rows.push_back(Json{{"t", Json::array({row.t.real(), row.t.imag()})},
                        {"component", X.divisors()[row.component].name},
                        {"coord", row.coord.str()},
                        {"predicted", rat_to_json(row.predicted)},
                        {"measured", rat_to_json(row.measured)},
                        {"discrepancy", row.discrepancy}});
  Json maxes = Json::array();
  for (const auto& [tv, d] : t.max_discrepancy_by_t)
    maxes.push_back(Json::array({std::abs(tv), d}));
  return Json{{"rows", std::move(rows)},
              {"max_discrepancy_by_t", std::move(maxes)},
              {"non_increasing", t.non_increasing()}};
}

std::string measure_to_csv(const AtomicMeasure& m, const SncModel& X,
                           const std::string& model_name) {
  std::ostringstream os;
  os << "model,depth,atom,mass\n";
  for (const auto& a : m.atoms)
    os << model_name << "," << m.depth << "," << a.target.str(X) << ","
       << to_string(a.mass) << "\n";
  return os.str();
}

std::string convergence_to_csv(const ConvergenceTable& t, const SncModel& X) {
  std::ostringstream os;
  os << "t,component,coord,predicted,measured,discrepancy\n";
  for (const auto& row : t.rows)
    os << std::abs(row.t) << "," << X.divisors()[row.component].name << ","
       << row.coord.str() << "," << to_string(row.predicted) << ","
       << to_string(row.measured) << "," << row.discrepancy << "\n";
  return os.str();
}

std::string span_tree_to_dot(const SpanTree& tree) {
  std::ostringstream os;
  os << "graph span {\n  node [shape=circle];\n";
  const auto& nodes = tree.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    bool leaf = nodes[i].children.empty();
    os << "  n" << i << " [label=\"" << (leaf ? "pt" : "disk") << i << "\""
       << (leaf ? ", shape=point" : "") << "];\n";
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].parent >= 0) os << "  n" << nodes[i].parent << " -- n" << i << ";\n";
  if (tree.has_infinity() && tree.root() >= 0)
    os << "  inf [shape=point];\n  inf -- n" << tree.root() << ";\n";
  os << "}\n";
  return os.str();
}

std::string dual_graph_to_dot(const SncModel& X) {
  std::ostringstream os;
  os << "graph dual {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto& d = X.divisors()[i];
    os << "  c" << i << " [label=\"" << d.name << " (n=" << d.multiplicity
       << ", q=" << to_string(d.eta.q()) << ")\"];\n";
  }
  for (const auto& [i, j] : X.adjacency())
    os << "  c" << i << " -- c" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace berklim
