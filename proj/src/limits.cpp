#include "berklim/limits.hpp"

#include <algorithm>
#include <cmath>

namespace berklim {

namespace {

long long ipow(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

void sort_atoms(AtomicMeasure& m) {
  auto key = [](const ReductionTarget& t) {
    int kind = t.kind == ReductionTarget::Kind::Generic ? 0
               : t.kind == ReductionTarget::Kind::Smooth ? 1
                                                         : 2;
    double re = 0.0, im = 0.0;
    int inf = 0;
    if (t.kind == ReductionTarget::Kind::Smooth) {
      inf = t.label.is_inf ? 1 : 0;
      if (!t.label.is_inf) {
        re = t.label.value.real();
        im = t.label.value.imag();
      }
    }
    return std::tuple<int, int, int, int, double, double>(kind, t.i, t.j, inf, re, im);
  };
  std::stable_sort(m.atoms.begin(), m.atoms.end(),
                   [&](const MeasureAtom& a, const MeasureAtom& b) {
                     return key(a.target) < key(b.target);
                   });
}

LimitResult limit_measure_full(const RationalMapK& f, const SncModel& X,
                               const LimitOptions& opts) {
  LimitResult out;

  if (f.degree() == 2 && f.is_polynomial()) {
    QuadraticReduction qr = potentially_good_quadratic(f);
    if (qr.potentially_good)
      throw Error(ErrorKind::Precondition,
                  "map has potentially good reduction (normal form |c| <= 1); "
                  "the degeneration limit requires genuinely bad reduction");
  } else {
    // Heuristic: a backward orbit concentrating at a single branch vertex
    // suggests the measure sits on one type-2 point (potentially good).
    long long probe_depth = std::min<long long>(opts.depth, 4);
    WeightedPointSet probe = canonical_measure_approx(
        f, probe_depth, opts.seed_point, opts.cap, opts.prng_seed);
    try {
      SpanTree tree = julia_span(probe);
      if (tree.branch_vertices().size() <= 1 && f.degree() >= 3)
        out.warnings.push_back(
            "backward orbit concentrates at a single branch vertex; the map "
            "may have potentially good reduction");
    } catch (const Error&) {
      out.warnings.push_back(
          "backward orbit collapsed to a single point; reduction type unclear");
    }
  }

  WeightedPointSet sample = canonical_measure_approx(
      f, opts.depth, opts.seed_point, opts.cap, opts.prng_seed);
  out.measure = pushforward(X, sample);
  sort_atoms(out.measure);
  return out;
}

AtomicMeasure limit_measure(const RationalMapK& f, const SncModel& X,
                            const LimitOptions& opts) {
  return limit_measure_full(f, X, opts).measure;
}

NodeMassReport node_mass_check(const RationalMapK& f, const SncModel& X,
                               const LimitOptions& opts) {
  NodeMassReport report;
  if (X.size() < 2) return report;  // vacuous

  AtomicMeasure mu = limit_measure(f, X, opts);

  // Minimal-model measures, one per component, same depth and seed.
  std::vector<AtomicMeasure> mu_E;
  mu_E.reserve(X.size());
  for (const auto& d : X.divisors())
    mu_E.push_back(limit_measure(f, SncModel::minimal_at(d.eta), opts));

  const Rat one(1);
  for (const auto& [i, j] : X.adjacency()) {
    ReductionTarget node = ReductionTarget::node(i, j);
    Rat measured = mu.mass_of(node);
    ProjLabel li = tangent_label(X.divisors()[i].eta, X.divisors()[j].eta);
    ProjLabel lj = tangent_label(X.divisors()[j].eta, X.divisors()[i].eta);
    Rat mi = mu_E[i].mass_of(ReductionTarget::smooth(0, li));
    Rat mj = mu_E[j].mass_of(ReductionTarget::smooth(0, lj));
    Rat expected = mi + mj - one;
    NodeMassRow row{i, j, node, measured, expected, measured - expected};
    report.all_exact = report.all_exact && row.discrepancy == Rat(0);
    report.rows.push_back(std::move(row));
  }

  // Smooth atoms must match the minimal-model mass at the same point.
  for (const auto& atom : mu.atoms) {
    if (atom.target.kind != ReductionTarget::Kind::Smooth) continue;
    Rat expected =
        mu_E[atom.target.i].mass_of(ReductionTarget::smooth(0, atom.target.label));
    NodeMassRow row{atom.target.i, -1, atom.target, atom.mass, expected,
                    atom.mass - expected};
    report.all_exact = report.all_exact && row.discrepancy == Rat(0);
    report.rows.push_back(std::move(row));
  }
  return report;
}

SMembership s_membership(const RationalMapK& f, const BerkPoint& z,
                         const LimitOptions& opts) {
  if (!z.is_type2())
    throw Error(ErrorKind::InvalidInput, "S-membership is asked of type-2 points");
  AtomicMeasure rho = limit_measure(f, SncModel::minimal_at(z), opts);
  SMembership out;
  out.atom_count = rho.atoms.size();
  out.in_S = rho.atoms.size() >= 2;
  out.resolution = Rat(1, ipow(f.degree(), opts.depth));
  return out;
}

SncModel quadratic_example_tower(const RationalMapK& f, long long k,
                                 const LimitOptions& opts) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "tower level must be >= 0");
  std::vector<Divisor> ds{Divisor{"E", BerkPoint::gauss(), 1}};
  if (k == 0) return SncModel::create(std::move(ds));

  // Depth k+1 samples separate the level-k itinerary balls.
  LimitOptions sample_opts = opts;
  sample_opts.depth = std::max(opts.depth, k + 1);
  WeightedPointSet sample = canonical_measure_approx(
      f, sample_opts.depth, sample_opts.seed_point, sample_opts.cap,
      sample_opts.prng_seed);

  // The level-j itinerary ball through a sample is the canonical disk of
  // radius exp(-j) around it; grouping falls out of canonical-form dedup.
  std::vector<BerkPoint> balls;
  for (const auto& [p, mass] : sample.points)
    for (long long level = 1; level <= k; ++level) {
      BerkPoint ball = BerkPoint::type2(p.value(), Rat(level));
      bool seen = false;
      for (const auto& b : balls)
        if (same_point(b, ball)) {
          seen = true;
          break;
        }
      if (!seen) balls.push_back(ball);
    }
  for (const auto& b : balls)
    ds.push_back(Divisor{"E" + std::to_string(ds.size()), b, 1});
  return SncModel::create(std::move(ds));
}

SpanAgreementReport span_vs_s_check(const RationalMapK& f,
                                    const std::vector<BerkPoint>& candidates,
                                    const LimitOptions& opts) {
  SpanAgreementReport report;
  if (candidates.empty()) return report;

  WeightedPointSet sample = canonical_measure_approx(
      f, opts.depth, opts.seed_point, opts.cap, opts.prng_seed);
  SpanTree tree = julia_span(sample);

  std::size_t agree = 0;
  for (const auto& cand : candidates) {
    SMembership sm = s_membership(f, cand, opts);
    bool on = tree.on_span(cand);
    if (sm.in_S == on) {
      ++agree;
    } else {
      report.witnesses.push_back("candidate " + cand.str() + ": in_S=" +
                                 (sm.in_S ? "true" : "false") + " on_span=" +
                                 (on ? "true" : "false"));
    }
    report.rows.push_back({cand, sm.in_S, on});
  }
  report.agreement =
      static_cast<double>(agree) / static_cast<double>(candidates.size());
  return report;
}

}  // namespace berklim
