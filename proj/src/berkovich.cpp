#include "berklim/berkovich.hpp"

#include <cmath>
#include <sstream>

namespace berklim {

std::string ProjLabel::str() const {
  if (is_inf) return "inf";
  std::ostringstream os;
  os << value.real();
  if (value.imag() >= 0) os << "+";
  os << value.imag() << "i";
  return os.str();
}

bool same_label(const ProjLabel& a, const ProjLabel& b, double tol) {
  if (a.is_inf || b.is_inf) return a.is_inf == b.is_inf;
  return std::abs(a.value - b.value) < tol;
}

BerkPoint BerkPoint::type1(PuiseuxSeries v) {
  return BerkPoint(Kind::Type1, std::move(v), Rat(0));
}

BerkPoint BerkPoint::infinity() {
  return BerkPoint(Kind::Infinity, PuiseuxSeries::zero(), Rat(0));
}

BerkPoint BerkPoint::type2(const PuiseuxSeries& center, const Rat& q) {
  if (center.precision() < q)
    throw Error(ErrorKind::InvalidInput,
                "disk center known to precision " + to_string(center.precision()) +
                    " < radius exponent " + to_string(q));
  // Canonical form: drop center terms with exponent >= q (they move within
  // the disk) but keep the precision bound for later normalizations.
  std::map<Rat, Complex> kept;
  for (const auto& [ex, c] : center.terms())
    if (ex < q) kept.emplace(ex, c);
  PuiseuxSeries canon = PuiseuxSeries::from_terms(center.ramification(),
                                                  std::move(kept),
                                                  center.precision());
  return BerkPoint(Kind::Type2, std::move(canon), q);
}

const PuiseuxSeries& BerkPoint::value() const {
  if (kind_ != Kind::Type1)
    throw Error(ErrorKind::InvalidInput, "value() on a non-classical point");
  return series_;
}

const PuiseuxSeries& BerkPoint::center() const {
  if (kind_ != Kind::Type2)
    throw Error(ErrorKind::InvalidInput, "center() on a non-disk point");
  return series_;
}

const Rat& BerkPoint::q() const {
  if (kind_ != Kind::Type2)
    throw Error(ErrorKind::InvalidInput, "q() on a non-disk point");
  return q_;
}

std::string BerkPoint::str() const {
  switch (kind_) {
    case Kind::Infinity: return "inf";
    case Kind::Type1: return series_.str();
    case Kind::Type2:
      return "zeta(" + series_.str() + ", q=" + to_string(q_) + ")";
  }
  return "?";
}

bool same_point(const BerkPoint& a, const BerkPoint& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case BerkPoint::Kind::Infinity: return true;
    case BerkPoint::Kind::Type1: return approx_equal(a.value(), b.value());
    case BerkPoint::Kind::Type2:
      return a.q() == b.q() && approx_equal(a.center(), b.center());
  }
  return false;
}

bool disk_contains(const BerkPoint& outer, const BerkPoint& inner) {
  if (outer.is_infinity()) return inner.is_infinity();
  if (outer.is_type1()) return same_point(outer, inner);
  if (inner.is_infinity()) return false;
  const Rat& q = outer.q();
  if (inner.is_type1())
    return (inner.value() - outer.center()).effective_valuation() >= q;
  return inner.q() >= q &&
         (inner.center() - outer.center()).effective_valuation() >= q;
}

BerkPoint join(const BerkPoint& a, const BerkPoint& b) {
  if (same_point(a, b)) return a;
  if (a.is_infinity() || b.is_infinity()) return BerkPoint::infinity();
  const PuiseuxSeries& x = a.is_type2() ? a.center() : a.value();
  const PuiseuxSeries& y = b.is_type2() ? b.center() : b.value();
  Rat qj = (x - y).effective_valuation();
  if (a.is_type2()) qj = std::min(qj, a.q());
  if (b.is_type2()) qj = std::min(qj, b.q());
  return BerkPoint::type2(x, qj);
}

BerkPoint join_disk(const BerkPoint& a, const BerkPoint& b) {
  BerkPoint j = join(a, b);
  if (j.is_infinity())
    throw Error(ErrorKind::InvalidInput,
                "join with the point at infinity is a direction, not a disk");
  return j;
}

bool path_contains(const BerkPoint& a, const BerkPoint& b, const BerkPoint& m) {
  if (same_point(a, b))
    throw Error(ErrorKind::Precondition, "path endpoints must differ");
  if (same_point(m, a) || same_point(m, b)) return true;
  if (m.is_infinity()) return false;  // endpoints handled above
  if (a.is_infinity()) return disk_contains(m, b);
  if (b.is_infinity()) return disk_contains(m, a);
  BerkPoint j = join(a, b);
  if (!disk_contains(j, m)) return false;
  return disk_contains(m, a) || disk_contains(m, b);
}

Valuation gauss_valuation(const PSPoly& F, const BerkPoint& p) {
  if (!p.is_type2())
    throw Error(ErrorKind::InvalidInput, "disk seminorm needs a type-2 point");
  PSPoly shifted = taylor_shift(F, p.center());
  Valuation best = Valuation::infinity();
  Rat k(0);
  for (const auto& c : shifted) {
    Valuation v = c.valuation();
    if (v.is_finite()) best = min(best, Valuation::of(v.value + k * p.q()));
    k += 1;
  }
  return best;
}

double gauss_norm(const PSPoly& F, const BerkPoint& p) {
  Valuation v = gauss_valuation(F, p);
  if (v.infinite) return 0.0;
  return std::exp(-to_double(v.value));
}

namespace {

// Label of x seen from the Gauss point.
ProjLabel label_at_gauss(const BerkPoint& x) {
  if (x.is_infinity()) return ProjLabel::infinity();
  if (x.is_type1()) {
    const PuiseuxSeries& v = x.value();
    if (!v.is_zero() && v.valuation().value < Rat(0)) return ProjLabel::infinity();
    return ProjLabel::at(v.constant_term());
  }
  // disk: strictly inside the open unit ball of its constant direction, or
  // unbounded otherwise
  const PuiseuxSeries& y = x.center();
  if (x.q() > Rat(0) && (y.is_zero() || y.valuation().value >= Rat(0)))
    return ProjLabel::at(y.constant_term());
  return ProjLabel::infinity();
}

}  // namespace

ProjLabel tangent_label(const BerkPoint& base, const BerkPoint& x) {
  if (!base.is_type2())
    throw Error(ErrorKind::InvalidInput, "tangent space is defined at type-2 points");
  if (same_point(base, x))
    throw Error(ErrorKind::InvalidInput, "tangent direction of the base point itself");
  // Normalize base to the Gauss point by z -> (z - center)/t^q.
  PuiseuxSeries scale = PuiseuxSeries::monomial(Complex(1.0, 0.0), -base.q());
  Mobius norm = Mobius::affine(scale, -(base.center() * scale));
  return label_at_gauss(mobius_apply(norm, x));
}

TangentDirection tangent_direction(const BerkPoint& base, const BerkPoint& x) {
  return TangentDirection{base, tangent_label(base, x)};
}

Mobius::Mobius(PuiseuxSeries a, PuiseuxSeries b, PuiseuxSeries c, PuiseuxSeries d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero())
    throw Error(ErrorKind::InvalidInput, "Mobius matrix is not invertible");
}

Mobius Mobius::identity() {
  auto one = PuiseuxSeries::constant(Complex(1.0, 0.0));
  auto zero = PuiseuxSeries::zero();
  return Mobius(one, zero, zero, one);
}

Mobius Mobius::affine(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  auto one = PuiseuxSeries::constant(Complex(1.0, 0.0));
  auto zero = PuiseuxSeries::zero();
  return Mobius(a, b, zero, one);
}

Mobius Mobius::inversion() {
  auto one = PuiseuxSeries::constant(Complex(1.0, 0.0));
  auto zero = PuiseuxSeries::zero();
  return Mobius(zero, one, one, zero);
}

PuiseuxSeries Mobius::det() const { return a_ * d_ - b_ * c_; }

Mobius Mobius::compose(const Mobius& rhs) const {
  return Mobius(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_);
}

Mobius Mobius::inverse() const { return Mobius(d_, -b_, -c_, a_); }

namespace {

BerkPoint apply_affine(const PuiseuxSeries& alpha, const PuiseuxSeries& beta,
                       const BerkPoint& p) {
  if (p.is_infinity()) return BerkPoint::infinity();
  if (p.is_type1()) return BerkPoint::type1(alpha * p.value() + beta);
  // zeta_{x,r} -> zeta_{alpha x + beta, r |alpha|}
  Rat va = alpha.valuation().value;  // alpha != 0 in an invertible map
  return BerkPoint::type2(alpha * p.center() + beta, p.q() + va);
}

BerkPoint apply_inversion(const BerkPoint& p) {
  if (p.is_infinity()) return BerkPoint::type1(PuiseuxSeries::zero());
  if (p.is_type1()) {
    if (p.value().is_zero()) return BerkPoint::infinity();
    return BerkPoint::type1(p.value().inverse());
  }
  const PuiseuxSeries& x = p.center();
  const Rat& q = p.q();
  if (!x.is_zero() && x.valuation().value < q) {
    // 0 outside the disk: zeta_{1/x, r/|x|^2}
    return BerkPoint::type2(x.inverse(), q - 2 * x.valuation().value);
  }
  // 0 inside: the image point is the disk of radius 1/r at 0
  return BerkPoint::type2(PuiseuxSeries::zero(Rat(1) - q), -q);
}

}  // namespace

BerkPoint mobius_apply(const Mobius& m, const BerkPoint& p) {
  if (p.is_type1() && !p.is_infinity()) {
    PuiseuxSeries num = m.a() * p.value() + m.b();
    PuiseuxSeries den = m.c() * p.value() + m.d();
    if (den.is_zero()) return BerkPoint::infinity();
    return BerkPoint::type1(num / den);
  }
  if (p.is_infinity()) {
    if (m.c().is_zero()) return BerkPoint::infinity();
    return BerkPoint::type1(m.a() / m.c());
  }
  // type 2: decompose into affine and inversion steps
  if (m.c().is_zero())
    return apply_affine(m.a() / m.d(), m.b() / m.d(), p);
  // (a z + b)/(c z + d) = a/c + (bc - ad) / (c (c z + d))
  BerkPoint u = apply_affine(m.c(), m.d(), p);
  BerkPoint w = apply_inversion(u);
  PuiseuxSeries alpha = (m.b() * m.c() - m.a() * m.d()) / m.c();
  PuiseuxSeries beta = m.a() / m.c();
  return apply_affine(alpha, beta, w);
}

}  // namespace berklim
