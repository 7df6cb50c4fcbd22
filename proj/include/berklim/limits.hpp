#pragma once

#include <string>
#include <vector>

#include "berklim/sncmodel.hpp"

namespace berklim {

struct LimitOptions {
  long long depth = 6;
  std::size_t cap = 4096;
  unsigned long long prng_seed = 1;
  // Non-exceptional for the quadratic family and outside its Julia region.
  BerkPoint seed_point = BerkPoint::type1(PuiseuxSeries::constant(Complex(2.0, 0.0)));
};

struct LimitResult {
  AtomicMeasure measure;
  std::vector<std::string> warnings;
};

// (red_X)_* of the depth-n approximation of the canonical measure.
// For quadratic polynomials the genuinely-bad-reduction precondition is
// enforced exactly; otherwise a concentration heuristic may add a warning.
LimitResult limit_measure_full(const RationalMapK& f, const SncModel& X,
                               const LimitOptions& opts = {});
AtomicMeasure limit_measure(const RationalMapK& f, const SncModel& X,
                            const LimitOptions& opts = {});

// Mass recombination at the nodes: the node atom must carry exactly
// mu_{E_i}(z) + mu_{E_j}(z) - 1, and smooth atoms exactly mu_{E_i}(z),
// with both minimal-model measures computed at the same depth and seed.
struct NodeMassRow {
  int i, j;           // adjacent components (j = -1 for a smooth-atom row)
  ReductionTarget target;
  Rat measured;       // atom mass in the X-measure
  Rat expected;       // from the minimal-model measures
  Rat discrepancy;    // measured - expected
};
struct NodeMassReport {
  std::vector<NodeMassRow> rows;
  bool all_exact = true;
};
NodeMassReport node_mass_check(const RationalMapK& f, const SncModel& X,
                               const LimitOptions& opts = {});

// Membership in S: the minimal-model limit at z has at least two atoms.
struct SMembership {
  bool in_S = false;
  std::size_t atom_count = 0;
  Rat resolution;  // smallest detectable mass at this depth
};
SMembership s_membership(const RationalMapK& f, const BerkPoint& z,
                         const LimitOptions& opts = {});

struct SpanAgreementRow {
  BerkPoint candidate;
  bool in_S;
  bool on_span;
};
struct SpanAgreementReport {
  std::vector<SpanAgreementRow> rows;
  double agreement = 1.0;  // fraction of candidates with in_S == on_span
  std::vector<std::string> witnesses;
};
// Compares S-membership with membership in the sampled Julia spanning tree.
SpanAgreementReport span_vs_s_check(const RationalMapK& f,
                                    const std::vector<BerkPoint>& candidates,
                                    const LimitOptions& opts = {});

// Deterministic atom ordering for reports and serialization.
void sort_atoms(AtomicMeasure& m);

// The model tower of the quadratic example: the trivial divisor plus the
// itinerary balls of every level up to k (1 + 2 + ... + 2^k components).
SncModel quadratic_example_tower(const RationalMapK& f, long long k,
                                 const LimitOptions& opts = {});

}  // namespace berklim
