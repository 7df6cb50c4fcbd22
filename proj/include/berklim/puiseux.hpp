#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "berklim/errors.hpp"
#include "berklim/rational.hpp"

namespace berklim {

using Complex = std::complex<double>;

// Truncated Puiseux series over C: finitely many terms c * t^q with exact
// rational exponents on the 1/e grid, known modulo O(t^prec). Coefficients
// are complex doubles; exponents and the precision bound are exact.
//
// Invariants maintained by construction:
//   - every stored exponent is < prec and has denominator dividing e;
//   - every stored coefficient has modulus >= kZeroTol;
//   - immutable after construction.
class PuiseuxSeries {
 public:
  static constexpr double kZeroTol = 1e-12;
  // Default number of term slots carried beyond the valuation, in units of
  // the exponent grid of the construction site.
  static constexpr long long kDefaultTermCount = 24;
  static constexpr long long kDefaultRamificationCap = 64;

  PuiseuxSeries() : e_(1), prec_(kDefaultTermCount) {}

  static PuiseuxSeries zero(Rat prec = Rat(kDefaultTermCount));
  static PuiseuxSeries constant(Complex c, Rat prec = Rat(kDefaultTermCount));
  // c * t^q
  static PuiseuxSeries monomial(Complex c, Rat q,
                                Rat rel_prec = Rat(kDefaultTermCount));
  static PuiseuxSeries t(Rat rel_prec = Rat(kDefaultTermCount));
  static PuiseuxSeries from_terms(long long e, std::map<Rat, Complex> terms,
                                  Rat prec);

  long long ramification() const { return e_; }
  const std::map<Rat, Complex>& terms() const { return terms_; }
  Rat precision() const { return prec_; }

  // True when no term survives pruning: the series is indistinguishable from
  // zero at this precision.
  bool is_zero() const { return terms_.empty(); }
  Valuation valuation() const;
  // Valuation used in precision bookkeeping: min(valuation, prec).
  Rat effective_valuation() const;
  double tnorm() const;

  Complex coeff(const Rat& q) const;
  Complex constant_term() const { return coeff(Rat(0)); }
  Complex leading_coeff() const;

  PuiseuxSeries truncated(Rat new_prec) const;
  PuiseuxSeries with_ramification(long long e2) const;
  // Multiply by t^q: shifts every exponent and the precision bound by q.
  PuiseuxSeries shifted(const Rat& q) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(Complex c, const PuiseuxSeries& a);
  friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b);

  PuiseuxSeries inverse() const;
  PuiseuxSeries pow(long long k) const;
  // All k branches of the k-th root, differing by k-th roots of unity on the
  // leading coefficient. Errors on the zero series and on the ramification cap.
  std::vector<PuiseuxSeries> nth_roots(
      long long k, long long ram_cap = kDefaultRamificationCap) const;

  // Evaluate at a concrete complex parameter; fractional powers use the
  // principal branch of t^(1/e).
  Complex eval(Complex t_value) const;

  std::string str() const;

 private:
  long long e_;
  std::map<Rat, Complex> terms_;
  Rat prec_;

  void normalize();  // prune small coefficients, drop terms >= prec, fix e
};

// Structural equality up to the zero threshold and the shared precision.
bool approx_equal(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Polynomials in one variable with Puiseux coefficients, ascending powers:
// P[k] is the coefficient of z^k.
using PSPoly = std::vector<PuiseuxSeries>;

PuiseuxSeries poly_eval(const PSPoly& P, const PuiseuxSeries& x);
// Coefficient sequence of w -> P(x + w); degree preserved, constant = P(x).
PSPoly taylor_shift(const PSPoly& P, const PuiseuxSeries& x);
PSPoly poly_derivative(const PSPoly& P);

// Newton polygon of P: valuations of the nonzero finite roots, plus the count
// of exact zero roots and the effective degree (trailing zero coefficients of
// a truncated polynomial drop the degree).
struct NewtonPolygon {
  long long zero_roots = 0;
  long long effective_degree = 0;
  struct Slope {
    Rat root_valuation;
    long long count;
  };
  std::vector<Slope> slopes;  // sorted by decreasing root valuation
};
NewtonPolygon newton_polygon(const PSPoly& P);

}  // namespace berklim
