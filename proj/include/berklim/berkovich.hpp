#pragma once

#include <string>
#include <vector>

#include "berklim/puiseux.hpp"

namespace berklim {

// A point of P^1(C), used as tangent-direction labels and smooth-point
// coordinates on central-fiber components.
struct ProjLabel {
  bool is_inf = false;
  Complex value{0.0, 0.0};

  static ProjLabel infinity() { return {true, {0.0, 0.0}}; }
  static ProjLabel at(Complex c) { return {false, c}; }
  std::string str() const;
};

bool same_label(const ProjLabel& a, const ProjLabel& b, double tol = 1e-9);

// A point of the Berkovich projective line over C((t)) restricted to the
// representable kinds: classical (type 1) points, the point at infinity, and
// disk (type 2) points with radius exp(-q), q rational.
//
// Type 2 centers are canonical: terms with exponent >= q are dropped and the
// center is truncated to precision q, so equal disks are structurally equal.
class BerkPoint {
 public:
  enum class Kind { Type1, Infinity, Type2 };

  static BerkPoint type1(PuiseuxSeries v);
  static BerkPoint infinity();
  static BerkPoint type2(const PuiseuxSeries& center, const Rat& q);
  static BerkPoint gauss() { return type2(PuiseuxSeries::zero(), Rat(0)); }

  Kind kind() const { return kind_; }
  bool is_type1() const { return kind_ == Kind::Type1; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_type2() const { return kind_ == Kind::Type2; }

  const PuiseuxSeries& value() const;   // type 1
  const PuiseuxSeries& center() const;  // type 2
  const Rat& q() const;                 // type 2

  std::string str() const;

 private:
  BerkPoint(Kind k, PuiseuxSeries s, Rat q) : kind_(k), series_(std::move(s)), q_(std::move(q)) {}
  Kind kind_;
  PuiseuxSeries series_;
  Rat q_;
};

bool same_point(const BerkPoint& a, const BerkPoint& b);

// Closed-disk containment. Type 1 points act as radius-zero disks (they
// contain only themselves); infinity contains only infinity.
bool disk_contains(const BerkPoint& outer, const BerkPoint& inner);

// Smallest closed disk containing both points. Joining with infinity yields
// the infinity sentinel (a direction, not a disk); join_disk rejects it.
BerkPoint join(const BerkPoint& a, const BerkPoint& b);
BerkPoint join_disk(const BerkPoint& a, const BerkPoint& b);

// Whether m lies on the unique arc [a, b]. Requires a != b.
bool path_contains(const BerkPoint& a, const BerkPoint& b, const BerkPoint& m);

// Exact -log of the sup-seminorm of a polynomial on a closed disk:
// min_k ( val(a_k) + k q ) over the recentered coefficients.
Valuation gauss_valuation(const PSPoly& F, const BerkPoint& p);
double gauss_norm(const PSPoly& F, const BerkPoint& p);

struct TangentDirection {
  BerkPoint base;
  ProjLabel label;
};

// The label in P^1(C) of the connected component of the complement of `base`
// containing x. At the Gauss point a bounded direction is labeled by the
// constant term; the unbounded one by infinity. Other bases are normalized
// by the affine map z -> (z - center)/t^q first.
ProjLabel tangent_label(const BerkPoint& base, const BerkPoint& x);
TangentDirection tangent_direction(const BerkPoint& base, const BerkPoint& x);

// z -> (a z + b)/(c z + d) with Puiseux entries.
class Mobius {
 public:
  Mobius(PuiseuxSeries a, PuiseuxSeries b, PuiseuxSeries c, PuiseuxSeries d);

  static Mobius identity();
  static Mobius affine(const PuiseuxSeries& a, const PuiseuxSeries& b);
  static Mobius inversion();

  const PuiseuxSeries& a() const { return a_; }
  const PuiseuxSeries& b() const { return b_; }
  const PuiseuxSeries& c() const { return c_; }
  const PuiseuxSeries& d() const { return d_; }

  PuiseuxSeries det() const;
  Mobius compose(const Mobius& rhs) const;  // this after rhs
  Mobius inverse() const;

 private:
  PuiseuxSeries a_, b_, c_, d_;
};

BerkPoint mobius_apply(const Mobius& m, const BerkPoint& p);

}  // namespace berklim
