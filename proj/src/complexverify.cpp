#include "berklim/complexverify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace berklim {

ComplexRationalMap eval_map_at(const RationalMapK& f, Complex t) {
  if (std::abs(t) == 0.0)
    throw Error(ErrorKind::Config, "t must be nonzero");
  ComplexRationalMap m;
  m.t = t;
  for (const auto& c : f.num()) m.num.push_back(c.eval(t));
  for (const auto& c : f.den()) m.den.push_back(c.eval(t));
  return m;
}

Complex apply_map(const ComplexRationalMap& m, Complex z) {
  return cpoly_eval(m.num, z) / cpoly_eval(m.den, z);
}

Rat ComplexSample::total_mass() const {
  Rat s(0);
  for (const auto& [p, mass] : points) s += mass;
  return s;
}

namespace {

// Preimages of target under the complex map; root slots carry equal weight.
std::vector<CPoint> complex_preimages(const ComplexRationalMap& m,
                                      const CPoint& target, long long degree) {
  CPoly h;
  if (target.is_inf) {
    h = m.den;
  } else {
    h.resize(std::max(m.num.size(), m.den.size()), Complex(0, 0));
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (k < m.num.size()) h[k] += m.num[k];
      if (k < m.den.size()) h[k] -= target.z * m.den[k];
    }
  }
  auto roots = cpoly_roots(h);
  std::vector<CPoint> out;
  for (auto r : roots) {
    if (!target.is_inf) {
      r = polish_root(h, r, 1e-12 * std::max(1.0, std::abs(target.z)));
      double residual = std::abs(apply_map(m, r) - target.z);
      if (residual > 1e-8 * std::max(1.0, std::abs(target.z)))
        throw Error(ErrorKind::SolverFailure,
                    "preimage residual " + std::to_string(residual) +
                        " beyond tolerance");
    }
    out.push_back({false, r});
  }
  // Degree deficit: preimages at infinity.
  for (long long k = static_cast<long long>(out.size()); k < degree; ++k)
    out.push_back({true, {0.0, 0.0}});
  return out;
}

}  // namespace

ComplexSample mu_t_sample(const RationalMapK& f, Complex t, long long n,
                          Complex w0, std::size_t cap,
                          unsigned long long prng_seed) {
  if (n < 1) throw Error(ErrorKind::Config, "depth must be >= 1");
  ComplexRationalMap m = eval_map_at(f, t);
  const long long d = f.degree();

  // Exceptional-seed check on the complex side: the depth-2 backward orbit
  // must contain more than one distinct point.
  {
    std::vector<CPoint> frontier{{false, w0}};
    std::vector<CPoint> orbit = frontier;
    for (int step = 0; step < 2; ++step) {
      std::vector<CPoint> next;
      for (const auto& p : frontier)
        for (const auto& q : complex_preimages(m, p, d)) next.push_back(q);
      orbit.insert(orbit.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    bool multiple = false;
    for (std::size_t i = 1; i < orbit.size() && !multiple; ++i) {
      if (orbit[i].is_inf != orbit[0].is_inf ||
          (!orbit[i].is_inf && std::abs(orbit[i].z - orbit[0].z) > 1e-9))
        multiple = true;
    }
    if (!multiple)
      throw Error(ErrorKind::Precondition, "seed is exceptional for f_t");
  }

  ComplexSample out;
  out.t = t;
  out.depth = n;
  out.seed = w0;
  out.prng_seed = prng_seed;

  std::vector<std::pair<CPoint, Rat>> frontier{{{false, w0}, Rat(1)}};
  std::mt19937_64 rng(prng_seed);
  const Rat dr(d);
  for (long long step = 0; step < n; ++step) {
    std::vector<std::pair<CPoint, Rat>> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(d));
    for (const auto& [p, mass] : frontier)
      for (const auto& q : complex_preimages(m, p, d))
        next.emplace_back(q, mass / dr);
    if (next.size() > cap) {
      out.stochastic = true;
      std::vector<double> weights;
      weights.reserve(next.size());
      for (const auto& [p, mass] : next) weights.push_back(to_double(mass));
      std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
      std::vector<std::pair<CPoint, Rat>> sampled;
      sampled.reserve(cap);
      Rat unit(1, static_cast<long long>(cap));
      for (std::size_t i = 0; i < cap; ++i)
        sampled.emplace_back(next[dist(rng)].first, unit);
      next = std::move(sampled);
    }
    frontier = std::move(next);
  }
  out.points = std::move(frontier);
  return out;
}

ComplexSample chart_transport(const Mobius& tau, Complex t,
                              const ComplexSample& sample) {
  Complex a = tau.a().eval(t);
  Complex b = tau.b().eval(t);
  Complex c = tau.c().eval(t);
  Complex d = tau.d().eval(t);
  if (std::abs(a * d - b * c) < 1e-14)
    throw Error(ErrorKind::Config, "chart map degenerates at this t");

  ComplexSample out = sample;
  for (auto& [p, mass] : out.points) {
    if (p.is_inf) {
      if (std::abs(c) < 1e-14) continue;  // stays at infinity
      p = CPoint{false, a / c};
      continue;
    }
    Complex den = c * p.z + d;
    if (std::abs(den) < 1e-300) {
      p = CPoint{true, {0.0, 0.0}};
      continue;
    }
    p = CPoint{false, (a * p.z + b) / den};
  }
  return out;
}

WeakCompareReport weak_compare(const ComplexSample& sample,
                               const std::vector<ChartAtom>& predicted,
                               double eps, double inf_horizon) {
  if (eps <= 0.0) throw Error(ErrorKind::Config, "eps must be positive");
  for (std::size_t i = 0; i < predicted.size(); ++i)
    for (std::size_t j = i + 1; j < predicted.size(); ++j) {
      if (predicted[i].coord.is_inf || predicted[j].coord.is_inf) continue;
      if (std::abs(predicted[i].coord.value - predicted[j].coord.value) <= 2 * eps)
        throw Error(ErrorKind::Config,
                    "eps-balls of predicted atoms overlap; decrease eps");
    }

  WeakCompareReport report;
  Rat assigned(0);
  for (const auto& atom : predicted) {
    Rat measured(0);
    for (const auto& [p, mass] : sample.points) {
      bool hit = atom.coord.is_inf
                     ? (p.is_inf || std::abs(p.z) > inf_horizon)
                     : (!p.is_inf && std::abs(p.z - atom.coord.value) <= eps);
      if (hit) measured += mass;
    }
    assigned += measured;
    double disc = std::abs(to_double(measured - atom.mass));
    report.rows.push_back({atom.coord, atom.mass, measured, disc});
    report.max_discrepancy = std::max(report.max_discrepancy, disc);
  }
  report.unassigned = sample.total_mass() - assigned;
  return report;
}

bool ConvergenceTable::non_increasing(double noise) const {
  for (std::size_t i = 1; i < max_discrepancy_by_t.size(); ++i)
    if (max_discrepancy_by_t[i].second >
        max_discrepancy_by_t[i - 1].second + noise)
      return false;
  return true;
}

ConvergenceTable convergence_table(const RationalMapK& f, const SncModel& X,
                                   const std::vector<Complex>& t_list,
                                   long long depth, double eps,
                                   const LimitOptions& prediction_opts,
                                   Complex w0) {
  return convergence_table(f, X, limit_measure(f, X, prediction_opts), t_list,
                           depth, eps, w0, prediction_opts.cap,
                           prediction_opts.prng_seed);
}

ConvergenceTable convergence_table(const RationalMapK& f, const SncModel& X,
                                   const AtomicMeasure& predicted,
                                   const std::vector<Complex>& t_list,
                                   long long depth, double eps, Complex w0,
                                   std::size_t cap,
                                   unsigned long long prng_seed) {
  if (t_list.empty()) throw Error(ErrorKind::Config, "empty t list");
  for (std::size_t i = 1; i < t_list.size(); ++i)
    if (std::abs(t_list[i]) >= std::abs(t_list[i - 1]))
      throw Error(ErrorKind::Config, "t list must decrease in modulus");

  // Distribute predicted atoms into component charts; node atoms are seen in
  // both adjacent charts at their tangent coordinates.
  std::vector<std::vector<ChartAtom>> chart_atoms(X.size());
  for (const auto& atom : predicted.atoms) {
    switch (atom.target.kind) {
      case ReductionTarget::Kind::Generic:
        throw Error(ErrorKind::Config,
                    "prediction has a generic-point atom; not comparable with "
                    "complex samples");
      case ReductionTarget::Kind::Smooth:
        chart_atoms[atom.target.i].push_back({atom.target.label, atom.mass});
        break;
      case ReductionTarget::Kind::Node: {
        const auto& ds = X.divisors();
        ProjLabel li = tangent_label(ds[atom.target.i].eta, ds[atom.target.j].eta);
        ProjLabel lj = tangent_label(ds[atom.target.j].eta, ds[atom.target.i].eta);
        chart_atoms[atom.target.i].push_back({li, atom.mass});
        chart_atoms[atom.target.j].push_back({lj, atom.mass});
        break;
      }
    }
  }

  ConvergenceTable table;
  for (const auto& t : t_list) {
    ComplexSample sample =
        mu_t_sample(f, t, depth, w0, prediction_opts.cap, prediction_opts.prng_seed);
    double max_disc = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (chart_atoms[i].empty()) continue;
      Mobius tau = minimal_model_conjugation(X.divisors()[i].eta);
      ComplexSample transported = chart_transport(tau, t, sample);
      WeakCompareReport rep = weak_compare(transported, chart_atoms[i], eps);
      for (const auto& row : rep.rows)
        table.rows.push_back({t, static_cast<int>(i), row.coord, row.predicted,
                              row.measured, row.discrepancy});
      max_disc = std::max(max_disc, rep.max_discrepancy);
    }
    table.max_discrepancy_by_t.emplace_back(t, max_disc);
  }
  return table;
}

}  // namespace berklim
