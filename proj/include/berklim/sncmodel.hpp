#pragma once

#include <string>
#include <vector>

#include "berklim/berkovich.hpp"
#include "berklim/dynamics.hpp"

namespace berklim {

struct Divisor {
  std::string name;
  BerkPoint eta = BerkPoint::gauss();  // type 2
  long long multiplicity = 1;
};

// A combinatorial snc model: a validated set of divisorial points with
// multiplicities. Validation enforces:
//   - pairwise distinct canonical points,
//   - join-closedness (every pairwise join is itself a divisor; a missing
//     branch vertex would be a non-snc contraction),
//   - the reduced denominator of each q divides the multiplicity.
class SncModel {
 public:
  static SncModel create(std::vector<Divisor> divisors);
  static SncModel trivial();
  static SncModel minimal_at(const BerkPoint& eta, std::string name = "E");

  const std::vector<Divisor>& divisors() const { return divisors_; }
  std::size_t size() const { return divisors_.size(); }
  int index_of(const std::string& name) const;
  int find_divisor(const BerkPoint& p) const;  // -1 when absent
  // Dual-graph edges: components whose divisorial points face each other
  // with no third divisor on the open arc.
  const std::vector<std::pair<int, int>>& adjacency() const { return adjacency_; }
  bool adjacent(int i, int j) const;

  SncModel add_divisor(const BerkPoint& eta, long long multiplicity,
                       std::string name = "") const;
  SncModel remove_divisor(const std::string& name) const;
  // Whether this model's divisors are a subset of X's (this = a contraction).
  bool is_contraction_of(const SncModel& X) const;

 private:
  SncModel() = default;
  std::vector<Divisor> divisors_;
  std::vector<std::pair<int, int>> adjacency_;
};

// Where a point of the Berkovich line reduces to on the central fiber.
struct ReductionTarget {
  enum class Kind { Generic, Smooth, Node };
  Kind kind = Kind::Generic;
  int i = -1;  // component (Generic, Smooth) or first node component
  int j = -1;  // second node component (i < j)
  ProjLabel label;  // Smooth only

  static ReductionTarget generic(int i) { return {Kind::Generic, i, -1, {}}; }
  static ReductionTarget smooth(int i, ProjLabel l) { return {Kind::Smooth, i, -1, l}; }
  static ReductionTarget node(int i, int j);
  std::string str(const SncModel& X) const;
};

bool same_target(const ReductionTarget& a, const ReductionTarget& b,
                 double tol = 1e-9);

ReductionTarget reduce(const SncModel& X, const BerkPoint& x);

struct MeasureAtom {
  ReductionTarget target;
  Rat mass;
};

// A finite atomic measure on the central fiber of a model.
struct AtomicMeasure {
  std::vector<MeasureAtom> atoms;
  long long depth = 0;       // sampling depth used to produce it
  bool stochastic = false;   // subsampled approximation
  unsigned long long prng_seed = 0;

  Rat total_mass() const;
  // Mass carried by a target (0 when absent).
  Rat mass_of(const ReductionTarget& t, double tol = 1e-9) const;
};

// Aggregate point masses by reduction target. Rejects mass sitting exactly
// on a divisorial point.
AtomicMeasure pushforward(const SncModel& X,
                          const std::vector<std::pair<BerkPoint, Rat>>& mu);
AtomicMeasure pushforward(const SncModel& X, const WeightedPointSet& mu);

// Image of an X-target under the contraction X -> Y (Y's divisors are a
// subset of X's).
ReductionTarget contraction_target_map(const SncModel& X, const SncModel& Y,
                                       const ReductionTarget& t);

// Verifies contraction-compatibility of the reduction maps on the samples:
// map(reduce(X, x)) must equal reduce(Y, x) for every sample x.
bool check_compatibility(const SncModel& X, const SncModel& Y,
                         const std::vector<BerkPoint>& samples,
                         std::string* witness = nullptr);

// tau(z) = (z - center)/t^q sending eta to the Gauss point: the chart of the
// minimal model with divisorial point eta.
Mobius minimal_model_conjugation(
    const BerkPoint& eta,
    long long ram_cap = PuiseuxSeries::kDefaultRamificationCap);

}  // namespace berklim
