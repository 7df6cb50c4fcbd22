#include <doctest.h>

#include <cmath>

#include "berklim/berkovich.hpp"
#include "helpers.hpp"

using namespace berklim;
using namespace berklim::testing;

namespace {

// x+(t) = (t + sqrt(t^2-4))/2 with constant term +i.
PuiseuxSeries fixed_point_plus() {
  PuiseuxSeries disc = (ps_mono(1.0, 2) - ps_const(4.0)).nth_roots(2)[0];
  if (std::abs(disc.constant_term() - Complex(0, 2)) > 1.0) disc = -disc;
  return Complex(0.5, 0.0) * (ps_t() + disc);
}

PuiseuxSeries fixed_point_minus() {
  PuiseuxSeries disc = (ps_mono(1.0, 2) - ps_const(4.0)).nth_roots(2)[0];
  if (std::abs(disc.constant_term() - Complex(0, 2)) > 1.0) disc = -disc;
  return Complex(0.5, 0.0) * (ps_t() - disc);
}

BerkPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> qpick(-4, 10);
  std::uniform_int_distribution<int> qden(1, 2);
  switch (kind(rng)) {
    case 0: return BerkPoint::type1(random_series(rng, false));
    case 1: {
      Rat q(qpick(rng), qden(rng));
      return BerkPoint::type2(random_series(rng, false), q);
    }
    default: {
      Rat q(qpick(rng), 1);
      return BerkPoint::type2(random_series(rng, false, false), q);
    }
  }
}

// Points whose series stay well-conditioned under division chains.
BerkPoint random_tame_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 1);
  std::uniform_int_distribution<int> qpick(-4, 10);
  std::uniform_int_distribution<int> qden(1, 2);
  PuiseuxSeries s = random_tame_series(rng);
  if (kind(rng) == 0) return BerkPoint::type1(s);
  Rat q(qpick(rng), qden(rng));
  if (s.precision() < q) return BerkPoint::type1(s);
  return BerkPoint::type2(s, q);
}

}  // namespace

TEST_CASE("gauss seminorm") {
  // |z| at the Gauss point is 1
  PSPoly z{PuiseuxSeries::zero(), ps_const(1.0)};
  CHECK(gauss_norm(z, BerkPoint::gauss()) == doctest::Approx(1.0));

  // constants restrict to the t-adic norm
  PSPoly c{ps_mono(3.0, 2)};
  CHECK(gauss_norm(c, BerkPoint::gauss()) == doctest::Approx(std::exp(-2.0)));
  CHECK(gauss_norm(c, BerkPoint::type2(ps_const(5.0), Rat(-3))) ==
        doctest::Approx(std::exp(-2.0)));

  // |z^2+1| on the disk of radius |t| at x+ equals e^-1: the recentered
  // constant term is t x+ and the linear term 2 x+ w contributes e^-1.
  PSPoly zsq1{ps_const(1.0), PuiseuxSeries::zero(), ps_const(1.0)};
  BerkPoint Bplus = BerkPoint::type2(fixed_point_plus(), Rat(1));
  CHECK(gauss_norm(zsq1, Bplus) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("gauss seminorm is multiplicative") {
  std::mt19937_64 rng(5150);
  PSPoly F{ps_const(1.0), ps_t(), ps_const(0.5, 1.0)};
  PSPoly G{ps_mono(2.0, -1), ps_const(1.0)};
  PSPoly FG(F.size() + G.size() - 1, PuiseuxSeries::zero());
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) FG[i + j] = FG[i + j] + F[i] * G[j];
  for (int iter = 0; iter < 200; ++iter) {
    BerkPoint p = random_point(rng);
    if (!p.is_type2()) continue;
    double lhs = gauss_norm(FG, p);
    double rhs = gauss_norm(F, p) * gauss_norm(G, p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("join: spec examples") {
  BerkPoint zero = BerkPoint::type1(PuiseuxSeries::zero());
  BerkPoint one = BerkPoint::type1(ps_const(1.0));
  CHECK(same_point(join(zero, one), BerkPoint::gauss()));

  // join of the two fixed points is the Gauss point
  BerkPoint xp = BerkPoint::type1(fixed_point_plus());
  BerkPoint xm = BerkPoint::type1(fixed_point_minus());
  CHECK(same_point(join(xp, xm), BerkPoint::gauss()));

  // nested disks
  BerkPoint d2 = BerkPoint::type2(PuiseuxSeries::zero(), Rat(2));
  BerkPoint d5 = BerkPoint::type2(PuiseuxSeries::zero(), Rat(5));
  CHECK(same_point(join(d2, d5), d2));

  // joining with infinity is a direction, not a disk
  CHECK(join(BerkPoint::infinity(), zero).is_infinity());
  CHECK_THROWS_AS(join_disk(BerkPoint::infinity(), zero), Error);
}

TEST_CASE("join is a semilattice on random points") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 400; ++iter) {
    BerkPoint a = random_point(rng);
    BerkPoint b = random_point(rng);
    BerkPoint c = random_point(rng);
    CHECK(same_point(join(a, b), join(b, a)));
    CHECK(same_point(join(a, a), a));
    CHECK(same_point(join(join(a, b), c), join(a, join(b, c))));
  }
}

TEST_CASE("path containment") {
  BerkPoint zero = BerkPoint::type1(PuiseuxSeries::zero());
  BerkPoint one = BerkPoint::type1(ps_const(1.0));
  CHECK(path_contains(zero, one, BerkPoint::gauss()));

  BerkPoint xp = BerkPoint::type1(fixed_point_plus());
  BerkPoint xm = BerkPoint::type1(fixed_point_minus());
  CHECK(path_contains(xp, xm, BerkPoint::gauss()));

  // the arc [0, t] stays inside the disk of radius e^-1
  BerkPoint tpt = BerkPoint::type1(ps_t());
  CHECK_FALSE(path_contains(zero, tpt, BerkPoint::gauss()));
  CHECK(path_contains(zero, tpt, BerkPoint::type2(PuiseuxSeries::zero(), Rat(1))));

  // arcs toward infinity climb through enclosing disks
  CHECK(path_contains(zero, BerkPoint::infinity(), BerkPoint::gauss()));
  CHECK(path_contains(zero, BerkPoint::infinity(),
                      BerkPoint::type2(PuiseuxSeries::zero(), Rat(-7))));
  CHECK_FALSE(path_contains(one, BerkPoint::infinity(),
                            BerkPoint::type2(PuiseuxSeries::zero(), Rat(1))));
}

TEST_CASE("tangent directions at the Gauss point") {
  BerkPoint gauss = BerkPoint::gauss();
  BerkPoint xp = BerkPoint::type1(fixed_point_plus());
  ProjLabel l = tangent_label(gauss, xp);
  CHECK_FALSE(l.is_inf);
  CHECK(std::abs(l.value - Complex(0, 1)) < 1e-9);

  // 1/t has norm > 1
  CHECK(tangent_label(gauss, BerkPoint::type1(ps_t().inverse())).is_inf);

  // a subdisk of the unit disk with constant center 3
  BerkPoint sub = BerkPoint::type2(ps_const(3.0), Rat(2));
  ProjLabel l3 = tangent_label(gauss, sub);
  CHECK_FALSE(l3.is_inf);
  CHECK(std::abs(l3.value - Complex(3, 0)) < 1e-9);

  CHECK(tangent_label(gauss, BerkPoint::infinity()).is_inf);
  CHECK_THROWS_AS(tangent_label(gauss, BerkPoint::gauss()), Error);
}

TEST_CASE("tangent coherence: same component, same label") {
  std::mt19937_64 rng(31337);
  int checked = 0;
  for (int iter = 0; iter < 500; ++iter) {
    BerkPoint base = random_point(rng);
    if (!base.is_type2()) continue;
    BerkPoint x = random_point(rng);
    BerkPoint y = random_point(rng);
    if (same_point(x, base) || same_point(y, base) || same_point(x, y)) continue;
    if (path_contains(x, y, base)) continue;  // different components
    CHECK(same_label(tangent_label(base, x), tangent_label(base, y)));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("mobius on disks: spec examples") {
  // z/t scales the disk of radius e^-1 to the Gauss point
  Mobius scale = Mobius::affine(ps_t().inverse(), PuiseuxSeries::zero());
  BerkPoint d1 = BerkPoint::type2(PuiseuxSeries::zero(), Rat(1));
  CHECK(same_point(mobius_apply(scale, d1), BerkPoint::gauss()));

  // the Gauss point is inversion-invariant
  CHECK(same_point(mobius_apply(Mobius::inversion(), BerkPoint::gauss()),
                   BerkPoint::gauss()));

  // (z - x+)/t sends the disk at x+ of radius e^-1 to the Gauss point
  PuiseuxSeries xp = fixed_point_plus();
  PuiseuxSeries tinv = ps_t().inverse();
  Mobius chart = Mobius::affine(tinv, -(xp * tinv));
  BerkPoint Bp = BerkPoint::type2(xp, Rat(1));
  CHECK(same_point(mobius_apply(chart, Bp), BerkPoint::gauss()));

  CHECK_THROWS_AS(Mobius(ps_t(), ps_t(), ps_const(1.0), ps_const(1.0)), Error);
}

TEST_CASE("mobius respects composition on random points") {
  std::mt19937_64 rng(4242);
  Mobius m1 = Mobius::affine(ps_const(0.0, 1.0), ps_t());
  Mobius m2(ps_const(1.0), ps_const(2.0), ps_const(1.0), ps_t());
  Mobius m21 = m2.compose(m1);
  for (int iter = 0; iter < 300; ++iter) {
    BerkPoint p = random_point(rng);
    BerkPoint lhs = mobius_apply(m2, mobius_apply(m1, p));
    BerkPoint rhs = mobius_apply(m21, p);
    CHECK(same_point(lhs, rhs));
  }
  // Round trips cancel exactly in exact arithmetic; in doubles the noise
  // scales with the expansion length, so the horizon is kept short.
  for (int iter = 0; iter < 100; ++iter) {
    BerkPoint p = random_tame_point(rng);
    Rat horizon = (p.is_type2() ? p.center() : p.value()).effective_valuation() + Rat(8);
    if (p.is_type2()) {
      if (p.center().precision() < horizon) continue;
      Rat q = p.q();
      if (horizon < q) continue;
      p = BerkPoint::type2(p.center().truncated(horizon), q);
    } else {
      p = BerkPoint::type1(p.value().truncated(horizon));
    }
    BerkPoint round = mobius_apply(m2.inverse(), mobius_apply(m2, p));
    CHECK(same_point(round, p));
  }
}

TEST_CASE("canonical form identifies equal disks") {
  // centers differing by an element of norm <= radius give the same point
  BerkPoint a = BerkPoint::type2(ps_const(3.0), Rat(0));
  CHECK(same_point(a, BerkPoint::gauss()));

  BerkPoint b = BerkPoint::type2(ps_const(1.0) + ps_mono(5.0, 3), Rat(2));
  BerkPoint c = BerkPoint::type2(ps_const(1.0) - ps_mono(2.0, 2), Rat(2));
  CHECK(same_point(b, c));
  CHECK_FALSE(same_point(b, BerkPoint::type2(ps_const(1.0), Rat(3))));
}
