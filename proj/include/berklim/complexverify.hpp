#pragma once

#include <complex>
#include <vector>

#include "berklim/limits.hpp"

namespace berklim {

// f_t for one concrete parameter value.
struct ComplexRationalMap {
  CPoly num, den;
  Complex t;
};
ComplexRationalMap eval_map_at(const RationalMapK& f, Complex t);
Complex apply_map(const ComplexRationalMap& m, Complex z);

struct CPoint {
  bool is_inf = false;
  Complex z{0.0, 0.0};
};

// Backward-iteration sample of the measure of maximal entropy of f_t.
struct ComplexSample {
  Complex t;
  std::vector<std::pair<CPoint, Rat>> points;
  long long depth = 0;
  Complex seed{0.0, 0.0};
  bool stochastic = false;
  unsigned long long prng_seed = 0;

  Rat total_mass() const;
};

ComplexSample mu_t_sample(const RationalMapK& f, Complex t, long long n,
                          Complex w0, std::size_t cap = 4096,
                          unsigned long long prng_seed = 1);

// Pointwise Mobius transport of a sample, with the chart map evaluated at t
// (principal branch of fractional powers).
ComplexSample chart_transport(const Mobius& tau, Complex t,
                              const ComplexSample& sample);

struct ChartAtom {
  ProjLabel coord;
  Rat mass;
};
struct WeakCompareRow {
  ProjLabel coord;
  Rat predicted;
  Rat measured;
  double discrepancy;
};
struct WeakCompareReport {
  std::vector<WeakCompareRow> rows;
  Rat unassigned{0};
  double max_discrepancy = 0.0;
};
// Mass-in-balls comparison: sample mass within eps of each predicted atom.
// Overlapping balls are a configuration error. Points beyond inf_horizon
// count toward an infinity atom.
WeakCompareReport weak_compare(const ComplexSample& sample,
                               const std::vector<ChartAtom>& predicted,
                               double eps, double inf_horizon = 1e9);

struct ConvergenceRow {
  Complex t;
  int component;
  ProjLabel coord;
  Rat predicted;
  Rat measured;
  double discrepancy;
};
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::vector<std::pair<Complex, double>> max_discrepancy_by_t;
  bool non_increasing(double noise = 1e-9) const;
};

// Empirical convergence of mu_t toward the predicted atomic limit on X:
// for each t, the sample is transported into every component chart and
// compared against the predicted atoms there. Node atoms are checked in both
// adjacent charts; generic atoms are not comparable. t_list must be sorted
// by decreasing modulus.
ConvergenceTable convergence_table(const RationalMapK& f, const SncModel& X,
                                   const AtomicMeasure& predicted,
                                   const std::vector<Complex>& t_list,
                                   long long depth, double eps,
                                   Complex w0 = Complex(2.0, 0.0),
                                   std::size_t cap = 4096,
                                   unsigned long long prng_seed = 1);
ConvergenceTable convergence_table(const RationalMapK& f, const SncModel& X,
                                   const std::vector<Complex>& t_list,
                                   long long depth, double eps,
                                   const LimitOptions& prediction_opts = {},
                                   Complex w0 = Complex(2.0, 0.0));

}  // namespace berklim
