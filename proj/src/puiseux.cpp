#include "berklim/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace berklim {

namespace {

long long lcm_ll(long long a, long long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

void PuiseuxSeries::normalize() {
  long long e = e_ > 0 ? e_ : 1;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < kZeroTol || !(it->first < prec_)) {
      it = terms_.erase(it);
    } else {
      e = lcm_ll(e, it->first.denominator());
      ++it;
    }
  }
  e_ = e;
}

PuiseuxSeries PuiseuxSeries::zero(Rat prec) {
  PuiseuxSeries s;
  s.e_ = 1;
  s.prec_ = prec;
  return s;
}

PuiseuxSeries PuiseuxSeries::constant(Complex c, Rat prec) {
  PuiseuxSeries s;
  s.e_ = 1;
  s.prec_ = prec;
  if (std::abs(c) >= kZeroTol) s.terms_[Rat(0)] = c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::monomial(Complex c, Rat q, Rat rel_prec) {
  PuiseuxSeries s;
  s.e_ = q.denominator();
  s.prec_ = q + rel_prec;
  if (std::abs(c) >= kZeroTol) s.terms_[q] = c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::t(Rat rel_prec) {
  return monomial(Complex(1.0, 0.0), Rat(1), rel_prec);
}

PuiseuxSeries PuiseuxSeries::from_terms(long long e, std::map<Rat, Complex> terms,
                                        Rat prec) {
  PuiseuxSeries s;
  s.e_ = e > 0 ? e : 1;
  s.terms_ = std::move(terms);
  s.prec_ = prec;
  s.normalize();
  return s;
}

Valuation PuiseuxSeries::valuation() const {
  if (terms_.empty()) return Valuation::infinity();
  return Valuation::of(terms_.begin()->first);
}

Rat PuiseuxSeries::effective_valuation() const {
  if (terms_.empty()) return prec_;
  return terms_.begin()->first;
}

double PuiseuxSeries::tnorm() const {
  Valuation v = valuation();
  if (v.infinite) return 0.0;
  return std::exp(-to_double(v.value));
}

Complex PuiseuxSeries::coeff(const Rat& q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

Complex PuiseuxSeries::leading_coeff() const {
  if (terms_.empty()) return Complex(0.0, 0.0);
  return terms_.begin()->second;
}

PuiseuxSeries PuiseuxSeries::truncated(Rat new_prec) const {
  PuiseuxSeries s(*this);
  s.prec_ = std::min(prec_, new_prec);
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::with_ramification(long long e2) const {
  PuiseuxSeries s(*this);
  s.e_ = lcm_ll(e_, e2 > 0 ? e2 : 1);
  return s;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rat& q) const {
  PuiseuxSeries s;
  s.e_ = lcm_ll(e_, q.denominator());
  s.prec_ = prec_ + q;
  for (const auto& [ex, c] : terms_) s.terms_[ex + q] = c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s(*this);
  for (auto& [ex, c] : s.terms_) c = -c;
  return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries s;
  s.e_ = lcm_ll(a.e_, b.e_);
  s.prec_ = std::min(a.prec_, b.prec_);
  s.terms_ = a.terms_;
  for (const auto& [ex, c] : b.terms_) {
    auto [it, inserted] = s.terms_.emplace(ex, c);
    if (!inserted) it->second += c;
  }
  s.normalize();
  return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a + (-b);
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries s;
  s.e_ = lcm_ll(a.e_, b.e_);
  // a known mod t^pa, so a*b known mod t^(pa + val b); symmetrically for b.
  s.prec_ = std::min(a.prec_ + b.effective_valuation(),
                     b.prec_ + a.effective_valuation());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Rat ex = ea + eb;
      if (!(ex < s.prec_)) continue;
      auto [it, inserted] = s.terms_.emplace(ex, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  s.normalize();
  return s;
}

PuiseuxSeries operator*(Complex c, const PuiseuxSeries& a) {
  PuiseuxSeries s(a);
  for (auto& [ex, coeff] : s.terms_) coeff *= c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
  if (terms_.empty())
    throw Error(ErrorKind::DivisionByZero, "inverse of the zero series");
  Rat v = terms_.begin()->first;
  Complex c = terms_.begin()->second;
  // a = c t^v (1 + u), val(u) > 0; 1/a = c^-1 t^-v sum (-u)^j. The working
  // precision is capped at the output's relative precision so the geometric
  // sum terminates even for exact inputs.
  Rat rel_prec = prec_ - v;
  PuiseuxSeries unit = ((1.0 / c) * shifted(-v)).truncated(rel_prec);
  PuiseuxSeries u = unit - constant(Complex(1.0, 0.0), rel_prec);
  PuiseuxSeries acc = constant(Complex(1.0, 0.0), rel_prec);
  PuiseuxSeries term = acc;
  while (true) {
    term = (term * (-u)).truncated(rel_prec);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return (1.0 / c) * acc.shifted(-v).truncated(prec_ - 2 * v);
}

PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a * b.inverse();
}

PuiseuxSeries PuiseuxSeries::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  PuiseuxSeries acc = constant(Complex(1.0, 0.0), prec_ - effective_valuation());
  PuiseuxSeries base(*this);
  long long n = k;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  if (k == 0) return constant(Complex(1.0, 0.0));
  return acc;
}

std::vector<PuiseuxSeries> PuiseuxSeries::nth_roots(long long k,
                                                    long long ram_cap) const {
  if (terms_.empty())
    throw Error(ErrorKind::DivisionByZero, "k-th root of the zero series");
  if (k <= 0) throw Error(ErrorKind::InvalidInput, "root order must be positive");
  Rat v = terms_.begin()->first;
  Complex c = terms_.begin()->second;
  Rat vk = v / k;
  long long e_out = lcm_ll(e_, vk.denominator());
  if (e_out > ram_cap)
    throw Error(ErrorKind::RamificationCap,
                "k-th root needs ramification " + std::to_string(e_out) +
                    " beyond cap " + std::to_string(ram_cap));

  // b = a / (c t^v) = 1 + u with val(u) > 0; solve w^k = b by Newton from
  // w=1, working at the fixed relative precision of b.
  Rat rel_prec = prec_ - v;
  PuiseuxSeries b = ((1.0 / c) * shifted(-v)).truncated(rel_prec);
  PuiseuxSeries w = constant(Complex(1.0, 0.0), rel_prec);
  const Complex kC(static_cast<double>(k), 0.0);
  int iter = 0;
  while (true) {
    PuiseuxSeries residual = (w.pow(k) - b).truncated(rel_prec);
    if (residual.is_zero()) break;
    if (++iter > 64)
      throw Error(ErrorKind::SolverFailure,
                  "series root iteration did not converge within 64 steps");
    PuiseuxSeries update = residual / (kC * w.pow(k - 1));
    // Fixed point of the pruned algebra: corrections below the zero
    // threshold are unrepresentable, so a vanishing update is convergence.
    if (update.is_zero()) break;
    w = (w - update).truncated(rel_prec);
  }

  Complex lead = std::pow(c, 1.0 / static_cast<double>(k));
  std::vector<PuiseuxSeries> out;
  out.reserve(k);
  Rat out_prec = prec_ - v + vk;
  for (long long j = 0; j < k; ++j) {
    double theta = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(k);
    Complex unity(std::cos(theta), std::sin(theta));
    PuiseuxSeries r = (lead * unity) * w.shifted(vk).truncated(out_prec);
    out.push_back(r.with_ramification(e_out));
  }
  return out;
}

Complex PuiseuxSeries::eval(Complex t_value) const {
  Complex acc(0.0, 0.0);
  for (const auto& [ex, c] : terms_)
    acc += c * std::pow(t_value, to_double(ex));
  return acc;
}

std::string PuiseuxSeries::str() const {
  if (terms_.empty()) return "O(t^" + berklim::to_string(prec_) + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() >= 0) os << "+";
    os << c.imag() << "i)";
    if (ex != Rat(0)) os << "*t^" << berklim::to_string(ex);
  }
  os << " + O(t^" << berklim::to_string(prec_) << ")";
  return os.str();
}

bool approx_equal(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return (a - b).is_zero();
}

PuiseuxSeries poly_eval(const PSPoly& P, const PuiseuxSeries& x) {
  if (P.empty()) return PuiseuxSeries::zero();
  PuiseuxSeries acc = P.back();
  for (auto it = P.rbegin() + 1; it != P.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PSPoly taylor_shift(const PSPoly& P, const PuiseuxSeries& x) {
  // Repeated synthetic division by (z - x): after d+1 passes the remainders
  // are the coefficients of P(x + w) in ascending powers of w.
  PSPoly work = P;
  PSPoly out(P.size());
  for (std::size_t k = 0; k < P.size(); ++k) {
    for (std::size_t j = work.size() - 1; j >= k + 1; --j)
      work[j - 1] = work[j - 1] + work[j] * x;
    out[k] = work[k];
  }
  return out;
}

PSPoly poly_derivative(const PSPoly& P) {
  PSPoly out;
  for (std::size_t k = 1; k < P.size(); ++k)
    out.push_back(Complex(static_cast<double>(k), 0.0) * P[k]);
  if (out.empty()) out.push_back(PuiseuxSeries::zero());
  return out;
}

NewtonPolygon newton_polygon(const PSPoly& P) {
  NewtonPolygon np;
  // Collect finite points (k, val(a_k)).
  std::vector<std::pair<long long, Rat>> pts;
  long long k = 0;
  for (const auto& a : P) {
    if (!a.is_zero()) pts.emplace_back(k, a.valuation().value);
    ++k;
  }
  if (pts.empty()) return np;
  np.zero_roots = pts.front().first;
  np.effective_degree = pts.back().first;
  if (pts.size() == 1) return np;

  // Lower convex hull, left to right.
  std::vector<std::pair<long long, Rat>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b only if it is strictly below segment a-p
      Rat lhs = (b.second - a.second) * (p.first - a.first);
      Rat rhs = (p.second - a.second) * (b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Rat slope = (hull[i].second - hull[i - 1].second) /
                Rat(hull[i].first - hull[i - 1].first);
    np.slopes.push_back({-slope, hull[i].first - hull[i - 1].first});
  }
  // slopes increase along the hull, so root valuations decrease; keep the
  // declared ordering
  return np;
}

}  // namespace berklim
