#pragma once

#include <utility>
#include <vector>

#include "berklim/berkovich.hpp"
#include "berklim/polyroots.hpp"

namespace berklim {

// A rational map of exact degree d >= 2 over the Puiseux coefficient field.
// Coefficient arrays are ascending in z and normalized so that the minimum
// valuation over all coefficients is 0.
class RationalMapK {
 public:
  RationalMapK(PSPoly num, PSPoly den);

  long long degree() const { return degree_; }
  const PSPoly& num() const { return num_; }
  const PSPoly& den() const { return den_; }
  bool is_polynomial() const;

  // Evaluate at a classical point (infinity handled projectively).
  BerkPoint eval_point(const BerkPoint& z) const;
  PuiseuxSeries eval(const PuiseuxSeries& z) const;  // throws on a pole

 private:
  PSPoly num_, den_;
  long long degree_;
};

// Constant-term map at t=0 with common polynomial factors cancelled.
struct ReducedMap {
  CPoly num, den;
  long long degree;  // max of the reduced degrees
};
ReducedMap reduce_at_zero(const RationalMapK& f);
bool has_good_reduction(const RationalMapK& f);

// Exact decision for quadratic polynomials via the normal form z^2 + c:
// potentially good iff |c| <= 1. Returns the conjugation tau with
// tau f tau^-1 = z^2 + c.
struct QuadraticReduction {
  bool potentially_good;
  Mobius tau;
  PuiseuxSeries c;
};
QuadraticReduction potentially_good_quadratic(const RationalMapK& f);

// Image of a pole-free closed disk; throws PoleInDisk otherwise.
BerkPoint image_type2(const RationalMapK& f, const BerkPoint& p);

// All roots of a polynomial with Puiseux coefficients (counted with
// multiplicity), to residual valuation >= prec. Zero roots are reported as a
// single entry of the appropriate multiplicity. The number of roots equals
// the effective degree; trailing coefficients that vanish drop it.
struct PuiseuxRoot {
  PuiseuxSeries root;
  long long multiplicity;
};
std::vector<PuiseuxRoot> newton_puiseux(
    const PSPoly& P, Rat prec,
    long long ram_cap = PuiseuxSeries::kDefaultRamificationCap);

struct Preimage {
  BerkPoint point;  // type 1 (possibly infinity)
  long long multiplicity;
};
// Solutions of f(z) = c with multiplicity; multiplicities sum to deg f.
std::vector<Preimage> preimages(const RationalMapK& f, const BerkPoint& c);

// Depth-n backward-orbit approximation of the canonical measure.
struct WeightedPointSet {
  std::vector<std::pair<BerkPoint, Rat>> points;
  long long depth = 0;
  BerkPoint seed = BerkPoint::infinity();
  bool stochastic = false;
  unsigned long long prng_seed = 0;
};
WeightedPointSet canonical_measure_approx(const RationalMapK& f, long long n,
                                          const BerkPoint& z0,
                                          std::size_t cap = 4096,
                                          unsigned long long prng_seed = 1);

// Join-closure of a finite point set with containment edges: the sampled
// Julia spanning tree.
class SpanTree {
 public:
  struct Node {
    BerkPoint point;
    int parent = -1;
    std::vector<int> children;
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  bool has_infinity() const { return has_infinity_; }

  void insert(const BerkPoint& x);
  // Whether m lies on some arc of the tree.
  bool on_span(const BerkPoint& m) const;
  std::vector<int> branch_vertices() const;  // >= 2 children
  std::size_t leaf_count() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
  bool has_infinity_ = false;

  int add_node(const BerkPoint& p, int parent);
  Node node_of(const BerkPoint& p);
};

SpanTree julia_span(const std::vector<BerkPoint>& points);
SpanTree julia_span(const WeightedPointSet& S);

// The two finite fixed points of a quadratic polynomial family with a
// Cantor-type Julia set (their constant terms must differ); x_plus is the one
// whose constant term sorts higher by (imag, real).
struct QuadraticFixedPoints {
  PuiseuxSeries x_plus, x_minus;
};
QuadraticFixedPoints quadratic_julia_fixed_points(const RationalMapK& f);

// First n symbols of the itinerary of z through the unit balls at the fixed
// points: +1 when the forward image stays at the x_plus side, -1 at x_minus.
std::vector<int> symbol_itinerary(const RationalMapK& f, const PuiseuxSeries& z,
                                  long long n);
std::vector<int> symbol_itinerary(const RationalMapK& f,
                                  const QuadraticFixedPoints& fp,
                                  const PuiseuxSeries& z, long long n);

}  // namespace berklim
