#pragma once

#include <random>

#include "berklim/dynamics.hpp"
#include "berklim/puiseux.hpp"

namespace berklim::testing {

inline PuiseuxSeries ps_const(double re, double im = 0.0) {
  return PuiseuxSeries::constant(Complex(re, im));
}

inline PuiseuxSeries ps_t() { return PuiseuxSeries::t(); }

// c * t^(num/den)
inline PuiseuxSeries ps_mono(double re, long long num, long long den = 1) {
  return PuiseuxSeries::monomial(Complex(re, 0.0), Rat(num, den));
}

// The section-4 family f_t(z) = (z^2 + 1)/t.
inline RationalMapK quadratic_family() {
  PSPoly num{ps_const(1.0), PuiseuxSeries::zero(), ps_const(1.0)};
  PSPoly den{ps_t(), PuiseuxSeries::zero(), PuiseuxSeries::zero()};
  return RationalMapK(num, den);
}

// Random truncated series with small integer-lattice coefficients, so exact
// cancellations genuinely occur.
inline PuiseuxSeries random_series(std::mt19937_64& rng, bool allow_ram2 = true,
                                   bool allow_negative = true) {
  std::uniform_int_distribution<int> e_pick(0, allow_ram2 ? 1 : 0);
  std::uniform_int_distribution<int> nterms(0, 5);
  std::uniform_int_distribution<int> expo(allow_negative ? -4 : 0, 12);
  std::uniform_int_distribution<int> lattice(-3, 3);
  long long e = e_pick(rng) ? 2 : 1;
  std::map<Rat, Complex> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Rat ex(expo(rng), e);
    Complex c(lattice(rng), lattice(rng));
    if (std::abs(c) > 0) terms[ex] = c;
  }
  return PuiseuxSeries::from_terms(e, std::move(terms), Rat(24));
}

inline PuiseuxSeries random_nonzero_series(std::mt19937_64& rng) {
  for (int tries = 0; tries < 100; ++tries) {
    PuiseuxSeries s = random_series(rng);
    if (!s.is_zero()) return s;
  }
  return ps_const(1.0);
}

// Well-conditioned nonzero series: unit-scale lead and small higher terms,
// so long expansions (inverses, roots) stay within double accuracy of the
// pruning threshold.
inline PuiseuxSeries random_tame_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e_pick(0, 1);
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<int> val_pick(-4, 6);
  std::uniform_int_distribution<int> gap(1, 8);
  std::uniform_real_distribution<double> angle(0.0, 6.28318);
  std::uniform_real_distribution<double> small(0.05, 0.3);
  long long e = e_pick(rng) ? 2 : 1;
  Rat v(val_pick(rng), e);
  std::map<Rat, Complex> terms;
  double th = angle(rng);
  terms[v] = Complex(std::cos(th), std::sin(th));
  int n = nterms(rng);
  Rat ex = v;
  for (int i = 0; i < n; ++i) {
    ex += Rat(gap(rng), e);
    double a = angle(rng), m = small(rng);
    terms[ex] = Complex(m * std::cos(a), m * std::sin(a));
  }
  return PuiseuxSeries::from_terms(e, std::move(terms), v + Rat(24));
}

// Largest surviving coefficient modulus; 0 for the zero series. Residual
// checks in the pruned algebra resolve zero only up to a small multiple of
// the pruning threshold.
inline double max_coeff(const PuiseuxSeries& s) {
  double m = 0.0;
  for (const auto& [ex, c] : s.terms()) m = std::max(m, std::abs(c));
  return m;
}

constexpr double kResidualResolution = 1e-10;

}  // namespace berklim::testing
