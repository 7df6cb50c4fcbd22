#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "berklim/dynamics.hpp"
#include "helpers.hpp"

using namespace berklim;
using namespace berklim::testing;

namespace {

RationalMapK zsq_plus_t() {
  // z^2 + t
  PSPoly num{ps_t(), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly den{ps_const(1.0), PuiseuxSeries::zero(), PuiseuxSeries::zero()};
  return RationalMapK(num, den);
}

RationalMapK zsq_plus_tinv2() {
  // z^2 + 1/t^2
  PSPoly num{ps_mono(1.0, -2), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly den{ps_const(1.0), PuiseuxSeries::zero(), PuiseuxSeries::zero()};
  return RationalMapK(num, den);
}

}  // namespace

TEST_CASE("map validation") {
  // degree must be exact: common factor z makes the resultant vanish
  PSPoly num{PuiseuxSeries::zero(), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly den{PuiseuxSeries::zero(), ps_const(1.0) + ps_t(), PuiseuxSeries::zero()};
  CHECK_THROWS_AS(RationalMapK(num, den), Error);

  // normalization: minimum coefficient valuation becomes 0
  RationalMapK f = zsq_plus_tinv2();
  Rat minv(1000);
  for (const auto* p : {&f.num(), &f.den()})
    for (const auto& c : *p)
      if (!c.is_zero()) minv = std::min(minv, c.valuation().value);
  CHECK(minv == Rat(0));
}

TEST_CASE("reduction at t=0 and good reduction") {
  ReducedMap r1 = reduce_at_zero(quadratic_family());
  CHECK(r1.degree == 0);
  CHECK(r1.den.empty());  // denominator vanishes: constant infinity
  CHECK_FALSE(has_good_reduction(quadratic_family()));

  ReducedMap r2 = reduce_at_zero(zsq_plus_t());
  CHECK(r2.degree == 2);
  CHECK(has_good_reduction(zsq_plus_t()));

  CHECK_FALSE(has_good_reduction(zsq_plus_tinv2()));

  // a genuine common-factor cancellation at t=0: (z^2-1-t)/(t z^2 + z - 1)
  PSPoly num{-ps_const(1.0) - ps_t(), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly den{-ps_const(1.0), ps_const(1.0), ps_t()};
  RationalMapK f(num, den);
  ReducedMap r3 = reduce_at_zero(f);
  CHECK(r3.degree == 1);  // (z^2-1)/(z-1) = z+1
  CHECK_FALSE(has_good_reduction(f));
}

TEST_CASE("potentially good reduction for quadratic polynomials") {
  QuadraticReduction q1 = potentially_good_quadratic(quadratic_family());
  CHECK_FALSE(q1.potentially_good);
  CHECK(q1.c.valuation().value == Rat(-2));  // normal form z^2 + 1/t^2

  QuadraticReduction q2 = potentially_good_quadratic(zsq_plus_t());
  CHECK(q2.potentially_good);
  CHECK(approx_equal(q2.c, ps_t()));

  QuadraticReduction q3 = potentially_good_quadratic(zsq_plus_tinv2());
  CHECK_FALSE(q3.potentially_good);

  PSPoly num{ps_const(0.3, 0.1), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly den{ps_const(1.0), PuiseuxSeries::zero(), PuiseuxSeries::zero()};
  QuadraticReduction q4 = potentially_good_quadratic(RationalMapK(num, den));
  CHECK(q4.potentially_good);

  // non-polynomial input is unsupported
  PSPoly rnum{ps_const(1.0), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly rden{PuiseuxSeries::zero(), ps_const(1.0), PuiseuxSeries::zero()};
  CHECK_THROWS_AS(potentially_good_quadratic(RationalMapK(rnum, rden)), Error);
}

TEST_CASE("images of disks") {
  // z^2 doubles radius exponents at disks centered at 0
  PSPoly num{PuiseuxSeries::zero(), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly den{ps_const(1.0), PuiseuxSeries::zero(), PuiseuxSeries::zero()};
  RationalMapK sq(num, den);
  BerkPoint img = image_type2(sq, BerkPoint::type2(PuiseuxSeries::zero(), Rat(3)));
  CHECK(same_point(img, BerkPoint::type2(PuiseuxSeries::zero(), Rat(6))));

  // the quadratic family maps B+- onto B (the Gauss point)
  RationalMapK f = quadratic_family();
  QuadraticFixedPoints fp = quadratic_julia_fixed_points(f);
  BerkPoint Bp = BerkPoint::type2(fp.x_plus, Rat(1));
  CHECK(same_point(image_type2(f, Bp), BerkPoint::gauss()));
  BerkPoint Bm = BerkPoint::type2(fp.x_minus, Rat(1));
  CHECK(same_point(image_type2(f, Bm), BerkPoint::gauss()));

  // radius formula at q=2: image is the disk at x+ with q=1
  BerkPoint deep = BerkPoint::type2(fp.x_plus, Rat(2));
  BerkPoint img2 = image_type2(f, deep);
  CHECK(img2.q() == Rat(1));
  CHECK(same_point(img2, BerkPoint::type2(fp.x_plus, Rat(1))));

  // pole inside the disk
  PSPoly rnum{ps_const(1.0), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly rden{PuiseuxSeries::zero(), ps_t(), PuiseuxSeries::zero()};
  RationalMapK pole_map(rnum, rden);  // (z^2+1)/(t z)
  CHECK_THROWS_AS(image_type2(pole_map, BerkPoint::gauss()), Error);
}

TEST_CASE("image containment oracle: sampled points land in the image disk") {
  std::mt19937_64 rng(1234);
  RationalMapK f = quadratic_family();
  QuadraticFixedPoints fp = quadratic_julia_fixed_points(f);
  std::uniform_int_distribution<int> lattice(-2, 2);
  for (Rat q : {Rat(1), Rat(2), Rat(3, 2)}) {
    BerkPoint disk = BerkPoint::type2(fp.x_plus, q);
    BerkPoint img = image_type2(f, disk);
    bool attained = false;
    for (int iter = 0; iter < 40; ++iter) {
      // random type-1 point of the disk: center + c t^q + higher terms
      PuiseuxSeries y = fp.x_plus;
      Rat ex = q;
      for (int j = 0; j < 3; ++j) {
        Complex c(lattice(rng), lattice(rng));
        y = y + PuiseuxSeries::monomial(c, ex);
        ex += Rat(1, 2);
      }
      PuiseuxSeries fy = f.eval(y);
      PuiseuxSeries diff = fy - img.center();
      Rat v = diff.effective_valuation();
      CHECK(v >= img.q());  // f(y) lies in the image disk
      if (v == img.q()) attained = true;
    }
    CHECK(attained);  // the radius is attained by boundary samples
  }
}

TEST_CASE("newton puiseux: spec examples") {
  // z^2 - t
  PSPoly p1{-ps_t(), PuiseuxSeries::zero(), ps_const(1.0)};
  auto r1 = newton_puiseux(p1, Rat(20));
  REQUIRE(r1.size() == 2);
  for (const auto& r : r1) {
    CHECK(r.multiplicity == 1);
    CHECK(r.root.valuation().value == Rat(1, 2));
    CHECK(max_coeff(poly_eval(p1, r.root)) < kResidualResolution);
  }

  // preimage equation z^2 + 1 - t c against the ps_root oracle
  PuiseuxSeries c = ps_const(0.7, -0.3) + ps_t();
  PSPoly p2{ps_const(1.0) - ps_t() * c, PuiseuxSeries::zero(), ps_const(1.0)};
  auto r2 = newton_puiseux(p2, Rat(20));
  REQUIRE(r2.size() == 2);
  auto oracle = (ps_t() * c - ps_const(1.0)).nth_roots(2);
  for (const auto& r : r2) {
    bool matched = false;
    for (const auto& o : oracle)
      if (max_coeff((r.root - o).truncated(Rat(18))) < 1e-8) matched = true;
    CHECK(matched);
  }

  // a double root: (z - x+)^2
  QuadraticFixedPoints fp = quadratic_julia_fixed_points(quadratic_family());
  PSPoly p3{fp.x_plus * fp.x_plus, Complex(-2.0, 0.0) * fp.x_plus, ps_const(1.0)};
  auto r3 = newton_puiseux(p3, Rat(10));
  long long total = 0;
  for (const auto& r : r3) {
    total += r.multiplicity;
    CHECK(max_coeff((r.root - fp.x_plus).truncated(Rat(10))) < 1e-7);
  }
  CHECK(total == 2);
}

TEST_CASE("newton puiseux: multiplicities sum to the degree on random polys") {
  std::mt19937_64 rng(2718281);
  for (int iter = 0; iter < 200; ++iter) {
    std::uniform_int_distribution<int> deg_pick(1, 4);
    int deg = deg_pick(rng);
    PSPoly P;
    for (int k = 0; k <= deg; ++k) P.push_back(random_series(rng, true, false));
    NewtonPolygon np = newton_polygon(P);
    if (np.effective_degree < 1) continue;
    auto roots = newton_puiseux(P, Rat(12));
    long long total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == np.effective_degree);
  }
}

TEST_CASE("preimages of the quadratic family") {
  RationalMapK f = quadratic_family();

  auto pre0 = preimages(f, BerkPoint::type1(PuiseuxSeries::zero()));
  REQUIRE(pre0.size() == 2);
  long long total = 0;
  bool plus_i = false, minus_i = false;
  for (const auto& p : pre0) {
    total += p.multiplicity;
    CHECK(p.point.is_type1());
    Complex c0 = p.point.value().constant_term();
    if (std::abs(c0 - Complex(0, 1)) < 1e-9) plus_i = true;
    if (std::abs(c0 - Complex(0, -1)) < 1e-9) minus_i = true;
  }
  CHECK(total == 2);
  CHECK(plus_i);
  CHECK(minus_i);

  // infinity is totally invariant for a polynomial
  auto pre_inf = preimages(f, BerkPoint::infinity());
  REQUIRE(pre_inf.size() == 1);
  CHECK(pre_inf[0].point.is_infinity());
  CHECK(pre_inf[0].multiplicity == 2);

  // preimages of x+ are +-x+ (z^2 = t x+ - 1 = x+^2)
  QuadraticFixedPoints fp = quadratic_julia_fixed_points(f);
  auto pre_fix = preimages(f, BerkPoint::type1(fp.x_plus));
  REQUIRE(pre_fix.size() == 2);
  long long m = 0;
  for (const auto& p : pre_fix) {
    m += p.multiplicity;
    bool is_plus =
        max_coeff((p.point.value() - fp.x_plus).truncated(Rat(12))) < 1e-8;
    bool is_neg =
        max_coeff((p.point.value() + fp.x_plus).truncated(Rat(12))) < 1e-8;
    CHECK((is_plus || is_neg));
  }
  CHECK(m == 2);
}

TEST_CASE("degree conservation on random targets") {
  std::mt19937_64 rng(555);
  RationalMapK f = quadratic_family();
  for (int iter = 0; iter < 50; ++iter) {
    BerkPoint c = BerkPoint::type1(random_tame_series(rng));
    auto pres = preimages(f, c);
    long long total = 0;
    for (const auto& p : pres) total += p.multiplicity;
    CHECK(total == f.degree());
  }
}

TEST_CASE("canonical measure approximation") {
  RationalMapK f = quadratic_family();
  BerkPoint seed0 = BerkPoint::type1(PuiseuxSeries::zero());

  WeightedPointSet s1 = canonical_measure_approx(f, 1, seed0);
  REQUIRE(s1.points.size() == 2);
  for (const auto& [p, mass] : s1.points) CHECK(mass == Rat(1, 2));

  WeightedPointSet s3 = canonical_measure_approx(f, 3, seed0);
  REQUIRE(s3.points.size() == 8);
  int plus = 0, minus = 0;
  Rat total(0);
  for (const auto& [p, mass] : s3.points) {
    CHECK(mass == Rat(1, 8));
    total += mass;
    REQUIRE(p.is_type1());
    Complex c0 = p.value().constant_term();
    if (std::abs(c0 - Complex(0, 1)) < 1e-9) ++plus;
    if (std::abs(c0 - Complex(0, -1)) < 1e-9) ++minus;
  }
  CHECK(total == Rat(1));
  CHECK(plus == 4);
  CHECK(minus == 4);

  // exceptional seed: infinity for a polynomial map
  CHECK_THROWS_AS(canonical_measure_approx(f, 1, BerkPoint::infinity()), Error);
}

TEST_CASE("pullback consistency: depth n+1 refines depth n") {
  RationalMapK f = quadratic_family();
  BerkPoint seed = BerkPoint::type1(ps_const(2.0));
  WeightedPointSet s2 = canonical_measure_approx(f, 2, seed);
  WeightedPointSet s3 = canonical_measure_approx(f, 3, seed);
  for (const auto& [p, mass] : s3.points) {
    bool found = false;
    PuiseuxSeries img = f.eval(p.value());
    for (const auto& [q, mq] : s2.points)
      if (max_coeff((img - q.value()).truncated(Rat(10))) < 1e-7) found = true;
    CHECK(found);
  }
}

TEST_CASE("julia span of the quadratic family") {
  RationalMapK f = quadratic_family();
  BerkPoint seed0 = BerkPoint::type1(PuiseuxSeries::zero());

  SpanTree t1 = julia_span(canonical_measure_approx(f, 1, seed0));
  CHECK(t1.leaf_count() == 2);
  auto b1 = t1.branch_vertices();
  REQUIRE(b1.size() == 1);
  CHECK(same_point(t1.nodes()[b1[0]].point, BerkPoint::gauss()));

  SpanTree t3 = julia_span(canonical_measure_approx(f, 3, seed0));
  CHECK(t3.leaf_count() == 8);
  CHECK(t3.branch_vertices().size() == 7);

  // two equal points span nothing
  std::vector<BerkPoint> dup{seed0, seed0};
  CHECK_THROWS_AS(julia_span(dup), Error);
}

TEST_CASE("symbol itineraries") {
  RationalMapK f = quadratic_family();
  QuadraticFixedPoints fp = quadratic_julia_fixed_points(f);

  // the fixed points have constant itineraries
  for (int s : symbol_itinerary(f, fp.x_plus, 6)) CHECK(s == +1);
  for (int s : symbol_itinerary(f, fp.x_minus, 6)) CHECK(s == -1);

  // depth-n preimages of 0 realize all 2^n itineraries exactly once
  const int n = 4;
  WeightedPointSet s =
      canonical_measure_approx(f, n, BerkPoint::type1(PuiseuxSeries::zero()));
  REQUIRE(s.points.size() == (1u << n));
  std::map<std::vector<int>, int> seen;
  for (const auto& [p, mass] : s.points)
    seen[symbol_itinerary(f, fp, p.value(), n)]++;
  CHECK(seen.size() == (1u << n));
  for (const auto& [key, count] : seen) CHECK(count == 1);

  // a point far outside the Julia region has no itinerary
  CHECK_THROWS_AS(symbol_itinerary(f, ps_const(5.0), 3), Error);
}
