#include "berklim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace berklim {

namespace {

bool all_zero(const PSPoly& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

Rat min_coeff_precision(const PSPoly& p) {
  Rat m = p.empty() ? Rat(PuiseuxSeries::kDefaultTermCount) : p.front().precision();
  for (const auto& c : p) m = std::min(m, c.precision());
  return m;
}

// Determinant over the series field by elimination with min-valuation pivots.
// Used only to certify that the Sylvester resultant does not vanish.
bool determinant_is_zero(std::vector<std::vector<PuiseuxSeries>> m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    Rat best(0);
    for (std::size_t r = col; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rat v = m[r][col].valuation().value;
      if (pivot == n || v < best) {
        pivot = r;
        best = v;
      }
    }
    if (pivot == n) return true;  // singular at working precision
    std::swap(m[col], m[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      PuiseuxSeries factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return false;
}

}  // namespace

RationalMapK::RationalMapK(PSPoly num, PSPoly den) : num_(std::move(num)), den_(std::move(den)) {
  const std::size_t len = std::max(num_.size(), den_.size());
  num_.resize(len, PuiseuxSeries::zero());
  den_.resize(len, PuiseuxSeries::zero());
  degree_ = static_cast<long long>(len) - 1;
  if (degree_ < 2)
    throw Error(ErrorKind::InvalidInput, "rational map must have degree >= 2");
  if (all_zero(num_) || all_zero(den_))
    throw Error(ErrorKind::InvalidInput, "zero numerator or denominator");

  // Normalize: minimum coefficient valuation becomes 0.
  Rat minval = Rat(0);
  bool first = true;
  for (const auto* poly : {&num_, &den_})
    for (const auto& c : *poly) {
      if (c.is_zero()) continue;
      Rat v = c.valuation().value;
      if (first || v < minval) {
        minval = v;
        first = false;
      }
    }
  if (minval != Rat(0)) {
    for (auto& c : num_) c = c.shifted(-minval);
    for (auto& c : den_) c = c.shifted(-minval);
  }

  // Exact-degree check: the degree-d Sylvester resultant of num and den must
  // not vanish (no common factor, no simultaneous leading-coefficient drop).
  const std::size_t d = static_cast<std::size_t>(degree_);
  std::vector<std::vector<PuiseuxSeries>> syl(2 * d,
      std::vector<PuiseuxSeries>(2 * d, PuiseuxSeries::zero()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= d; ++j) {
      syl[i][i + j] = num_[d - j];
      syl[d + i][i + j] = den_[d - j];
    }
  if (determinant_is_zero(std::move(syl)))
    throw Error(ErrorKind::InvalidInput,
                "map does not have exact degree " + std::to_string(degree_) +
                    " (vanishing resultant)");
}

bool RationalMapK::is_polynomial() const {
  for (std::size_t k = 1; k < den_.size(); ++k)
    if (!den_[k].is_zero()) return false;
  return !den_[0].is_zero();
}

PuiseuxSeries RationalMapK::eval(const PuiseuxSeries& z) const {
  PuiseuxSeries den_v = poly_eval(den_, z);
  if (den_v.is_zero())
    throw Error(ErrorKind::PoleInDisk, "evaluation at a pole");
  return poly_eval(num_, z) / den_v;
}

BerkPoint RationalMapK::eval_point(const BerkPoint& z) const {
  if (z.is_type2())
    throw Error(ErrorKind::InvalidInput, "eval_point expects a classical point");
  if (z.is_infinity()) {
    const PuiseuxSeries& an = num_.back();
    const PuiseuxSeries& bn = den_.back();
    if (bn.is_zero()) return BerkPoint::infinity();
    return BerkPoint::type1(an / bn);
  }
  PuiseuxSeries den_v = poly_eval(den_, z.value());
  if (den_v.is_zero()) return BerkPoint::infinity();
  return BerkPoint::type1(poly_eval(num_, z.value()) / den_v);
}

ReducedMap reduce_at_zero(const RationalMapK& f) {
  auto constant_poly = [](const PSPoly& p) {
    CPoly out;
    for (const auto& c : p) out.push_back(c.constant_term());
    while (out.size() > 1 && std::abs(out.back()) < 1e-9) out.pop_back();
    if (out.size() == 1 && std::abs(out[0]) < 1e-9) out.clear();
    return out;
  };
  CPoly n0 = constant_poly(f.num());
  CPoly d0 = constant_poly(f.den());

  ReducedMap out;
  if (n0.empty() || d0.empty()) {
    // constant 0 or constant infinity
    out.num = n0;
    out.den = d0;
    out.degree = 0;
    return out;
  }
  // Cancel common factors by matching roots.
  auto rn = cpoly_roots(n0);
  auto rd = cpoly_roots(d0);
  std::vector<bool> used(rn.size(), false);
  std::vector<Complex> keep_d;
  for (const auto& r : rd) {
    bool cancelled = false;
    for (std::size_t i = 0; i < rn.size(); ++i) {
      if (used[i]) continue;
      if (std::abs(rn[i] - r) < 1e-6 * std::max(1.0, std::abs(r))) {
        used[i] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) keep_d.push_back(r);
  }
  std::vector<Complex> keep_n;
  for (std::size_t i = 0; i < rn.size(); ++i)
    if (!used[i]) keep_n.push_back(rn[i]);

  auto rebuild = [](const std::vector<Complex>& roots, Complex lead) {
    CPoly p{lead};
    for (const auto& r : roots) {
      CPoly q(p.size() + 1, Complex(0, 0));
      for (std::size_t k = 0; k < p.size(); ++k) {
        q[k + 1] += p[k];
        q[k] -= p[k] * r;
      }
      p = q;
    }
    return p;
  };
  out.num = rebuild(keep_n, n0.back());
  out.den = rebuild(keep_d, d0.back());
  out.degree = static_cast<long long>(std::max(keep_n.size(), keep_d.size()));
  return out;
}

bool has_good_reduction(const RationalMapK& f) {
  return reduce_at_zero(f).degree == f.degree();
}

QuadraticReduction potentially_good_quadratic(const RationalMapK& f) {
  if (f.degree() != 2 || !f.is_polynomial())
    throw Error(ErrorKind::InvalidInput,
                "potential-good-reduction decision implemented only for "
                "quadratic polynomials");
  const PuiseuxSeries& b = f.den()[0];
  PuiseuxSeries alpha = f.num()[2] / b;
  PuiseuxSeries beta = f.num()[1] / b;
  PuiseuxSeries gamma = f.num()[0] / b;
  Complex half(0.5, 0.0);
  Complex quarter(0.25, 0.0);
  // tau = alpha z + beta/2 conjugates f to z^2 + c.
  PuiseuxSeries c =
      alpha * gamma - quarter * (beta * beta) + half * beta;
  QuadraticReduction out{
      c.is_zero() || !(c.valuation().value < Rat(0)),
      Mobius::affine(alpha, half * beta), c};
  return out;
}

BerkPoint image_type2(const RationalMapK& f, const BerkPoint& p) {
  if (!p.is_type2())
    throw Error(ErrorKind::InvalidInput, "image_type2 expects a type-2 point");
  const Rat& q = p.q();
  PSPoly pn = taylor_shift(f.num(), p.center());
  PSPoly pd = taylor_shift(f.den(), p.center());

  // Pole check: any root of the recentered denominator with valuation >= q
  // lies in the closed disk.
  if (pd[0].is_zero())
    throw Error(ErrorKind::PoleInDisk, "disk center is a pole");
  NewtonPolygon poly = newton_polygon(pd);
  for (const auto& s : poly.slopes)
    if (s.root_valuation >= q)
      throw Error(ErrorKind::PoleInDisk,
                  "denominator has a root in the disk (valuation " +
                      to_string(s.root_valuation) + " >= q=" + to_string(q) + ")");

  // g(w) = f(x+w) - f(x) = A(w) / (Pd(w) Pd(0)); |Pd| is constant on a
  // pole-free disk, so  -log sup|g| = min_k(val A_k + k q) - 2 val Pd(0).
  PuiseuxSeries fx = pn[0] / pd[0];
  Valuation best = Valuation::infinity();
  for (std::size_t k = 1; k < pn.size(); ++k) {
    PuiseuxSeries ak = pn[k] * pd[0] - pn[0] * pd[k];
    Valuation v = ak.valuation();
    if (v.is_finite())
      best = min(best, Valuation::of(v.value + Rat(static_cast<long long>(k)) * q));
  }
  if (best.infinite)
    throw Error(ErrorKind::SolverFailure,
                "image radius is indistinguishable from zero at this precision");
  Rat q_out = best.value - 2 * pd[0].valuation().value;
  return BerkPoint::type2(fx, q_out);
}

namespace {

// Substitute z = t^lambda (c + w) and renormalize the content.
PSPoly branch_substitute(const PSPoly& P, const Rat& lambda, Complex c) {
  PSPoly scaled(P.size());
  Rat k(0);
  for (std::size_t i = 0; i < P.size(); ++i) {
    scaled[i] = P[i].shifted(k * lambda);
    k += 1;
  }
  PSPoly shifted = taylor_shift(scaled, PuiseuxSeries::constant(c));
  Rat content(0);
  bool first = true;
  for (const auto& a : shifted) {
    if (a.is_zero()) continue;
    Rat v = a.valuation().value;
    if (first || v < content) {
      content = v;
      first = false;
    }
  }
  if (!first && content != Rat(0))
    for (auto& a : shifted) a = a.shifted(-content);
  return shifted;
}

PuiseuxSeries newton_refine(const PSPoly& P, PuiseuxSeries z, const Rat& prec) {
  PSPoly dP = poly_derivative(P);
  bool have_last = false;
  Valuation last_val = Valuation::infinity();
  for (int iter = 0; iter < 64; ++iter) {
    PuiseuxSeries res = poly_eval(P, z);
    if (res.is_zero() || res.valuation().value >= prec) return z;
    Valuation v = res.valuation();
    if (have_last && !(last_val < v)) {
      // Stagnation: the residual valuation stopped improving. Terms at the
      // noise floor of the evaluation (which scales with the coefficient
      // magnitudes) are acceptable; anything larger is a genuine failure.
      auto coeff_scale = [](const PuiseuxSeries& s) {
        double m = 0.0;
        for (const auto& [ex, c] : s.terms()) m = std::max(m, std::abs(c));
        return m;
      };
      double scale = 1.0, zscale = std::max(1.0, coeff_scale(z));
      double zpow = 1.0;
      for (const auto& coeff : P) {
        scale = std::max(scale, coeff_scale(coeff) * zpow);
        zpow *= zscale;
      }
      double worst = coeff_scale(res);
      if (worst < 1e-6 * scale) return z;
      throw Error(ErrorKind::SolverFailure,
                  "Newton refinement stagnated with residual magnitude " +
                      std::to_string(worst));
    }
    last_val = v;
    have_last = true;
    PuiseuxSeries der = poly_eval(dP, z);
    if (der.is_zero())
      throw Error(ErrorKind::SolverFailure,
                  "derivative vanished during Newton refinement");
    PuiseuxSeries update = res / der;
    if (update.is_zero()) return z;  // converged to the pruning resolution
    z = z - update;
  }
  throw Error(ErrorKind::SolverFailure,
              "Newton refinement did not reach the target precision in 64 steps");
}

// prec is the residual-valuation target in the coordinate of P; recursion
// levels shrink it by the branch exponent.
void newton_puiseux_rec(const PSPoly& P, const Rat& prec, long long ram_cap,
                        int depth, std::vector<PuiseuxRoot>& out) {
  if (depth > 64)
    throw Error(ErrorKind::SolverFailure,
                "Newton-Puiseux branch recursion exceeded 64 levels");
  NewtonPolygon np = newton_polygon(P);
  if (np.effective_degree == 0) return;

  if (np.zero_roots > 0)
    out.push_back({PuiseuxSeries::zero(prec), np.zero_roots});

  for (const auto& slope : np.slopes) {
    const Rat& lambda = slope.root_valuation;
    if (lambda.denominator() > ram_cap)
      throw Error(ErrorKind::RamificationCap,
                  "root exponent " + to_string(lambda) + " exceeds ramification cap");
    // Residue polynomial: terms on the polygon edge of this slope.
    Valuation line = Valuation::infinity();
    Rat k(0);
    for (std::size_t i = 0; i < P.size(); ++i, k += 1) {
      if (P[i].is_zero()) continue;
      Rat h = P[i].valuation().value + k * lambda;
      if (line.infinite || h < line.value) line = Valuation::of(h);
    }
    std::vector<std::pair<long long, Complex>> on_edge;
    k = Rat(0);
    for (std::size_t i = 0; i < P.size(); ++i, k += 1) {
      if (P[i].is_zero()) continue;
      if (P[i].valuation().value + k * lambda == line.value)
        on_edge.emplace_back(static_cast<long long>(i), P[i].leading_coeff());
    }
    long long kmin = on_edge.front().first;
    CPoly residue(on_edge.back().first - kmin + 1, Complex(0, 0));
    for (const auto& [idx, coeff] : on_edge) residue[idx - kmin] = coeff;

    auto clusters = cluster_roots(cpoly_roots(residue));
    for (const auto& cl : clusters) {
      if (std::abs(cl.value) < 1e-9) continue;  // zero roots counted above
      if (lambda >= prec) {
        // The branch leading term already exceeds the requested precision.
        out.push_back({PuiseuxSeries::monomial(cl.value, lambda, Rat(1)),
                       cl.multiplicity});
        continue;
      }
      if (cl.multiplicity == 1) {
        PuiseuxSeries z0 = PuiseuxSeries::monomial(cl.value, lambda, prec - lambda);
        out.push_back({newton_refine(P, z0, prec), 1});
        continue;
      }
      // Multiple branch: recurse on P(t^lambda (c + w)) and keep the roots
      // with positive valuation (the ones belonging to this branch).
      PSPoly Q = branch_substitute(P, lambda, cl.value);
      std::vector<PuiseuxRoot> sub;
      newton_puiseux_rec(Q, prec - lambda, ram_cap, depth + 1, sub);
      for (const auto& r : sub) {
        Valuation v = r.root.valuation();
        if (v.is_finite() && !(v.value > Rat(0))) continue;
        PuiseuxSeries w = r.root + PuiseuxSeries::constant(cl.value, prec - lambda);
        out.push_back({w.shifted(lambda), r.multiplicity});
      }
    }
  }
}

}  // namespace

std::vector<PuiseuxRoot> newton_puiseux(const PSPoly& P, Rat prec,
                                        long long ram_cap) {
  if (all_zero(P))
    throw Error(ErrorKind::InvalidInput, "root-finding on the zero polynomial");
  NewtonPolygon np = newton_polygon(P);
  if (np.effective_degree < 1)
    throw Error(ErrorKind::InvalidInput, "root-finding on a constant polynomial");
  std::vector<PuiseuxRoot> out;
  newton_puiseux_rec(P, prec, ram_cap, 0, out);
  // Check ramification of every root against the cap.
  for (const auto& r : out)
    if (r.root.ramification() > ram_cap)
      throw Error(ErrorKind::RamificationCap, "root ramification exceeds cap");
  return out;
}

std::vector<Preimage> preimages(const RationalMapK& f, const BerkPoint& c) {
  if (c.is_type2())
    throw Error(ErrorKind::InvalidInput, "preimages of classical points only");
  PSPoly P;
  if (c.is_infinity()) {
    P = f.den();
  } else {
    P.reserve(f.num().size());
    for (std::size_t k = 0; k < f.num().size(); ++k)
      P.push_back(f.num()[k] - c.value() * f.den()[k]);
  }
  if (all_zero(P))
    throw Error(ErrorKind::SolverFailure,
                "preimage polynomial vanished at working precision");

  std::vector<Preimage> out;
  long long finite = 0;
  NewtonPolygon np = newton_polygon(P);
  if (np.effective_degree >= 1) {
    Rat prec = min_coeff_precision(P);
    for (auto& r : newton_puiseux(P, prec)) {
      out.push_back({BerkPoint::type1(r.root), r.multiplicity});
      finite += r.multiplicity;
    }
  }
  // Degree deficit lands on the preimage at infinity.
  long long deficit = f.degree() - finite;
  if (deficit > 0) out.push_back({BerkPoint::infinity(), deficit});
  return out;
}

WeightedPointSet canonical_measure_approx(const RationalMapK& f, long long n,
                                          const BerkPoint& z0, std::size_t cap,
                                          unsigned long long prng_seed) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "depth must be >= 1");
  if (z0.is_type2())
    throw Error(ErrorKind::InvalidInput, "seed must be a classical point");

  // Operational exceptionality check: the backward orbit to depth 2 must
  // contain more than one distinct point.
  {
    std::vector<BerkPoint> orbit{z0};
    std::vector<BerkPoint> frontier{z0};
    for (int step = 0; step < 2; ++step) {
      std::vector<BerkPoint> next;
      for (const auto& p : frontier)
        for (const auto& pre : preimages(f, p)) next.push_back(pre.point);
      for (const auto& p : next) orbit.push_back(p);
      frontier = std::move(next);
    }
    bool multiple = false;
    for (std::size_t i = 1; i < orbit.size() && !multiple; ++i)
      if (!same_point(orbit[i], orbit[0])) multiple = true;
    if (!multiple)
      throw Error(ErrorKind::Precondition,
                  "seed is exceptional: backward orbit has a single point");
  }

  WeightedPointSet out;
  out.depth = n;
  out.seed = z0;
  out.prng_seed = prng_seed;
  out.stochastic = false;

  const Rat d(f.degree());
  std::vector<std::pair<BerkPoint, Rat>> frontier{{z0, Rat(1)}};
  std::mt19937_64 rng(prng_seed);
  for (long long step = 0; step < n; ++step) {
    std::vector<std::pair<BerkPoint, Rat>> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(f.degree()));
    for (const auto& [p, mass] : frontier)
      for (const auto& pre : preimages(f, p))
        next.emplace_back(pre.point, mass * Rat(pre.multiplicity) / d);
    if (next.size() > cap) {
      // Uniform mass-weighted subsample with replacement, renormalized.
      out.stochastic = true;
      std::vector<double> weights;
      weights.reserve(next.size());
      for (const auto& [p, m] : next) weights.push_back(to_double(m));
      std::discrete_distribution<std::size_t> dist(weights.begin(), weights.end());
      std::vector<std::pair<BerkPoint, Rat>> sampled;
      sampled.reserve(cap);
      Rat unit(1, static_cast<long long>(cap));
      for (std::size_t i = 0; i < cap; ++i)
        sampled.emplace_back(next[dist(rng)].first, unit);
      next = std::move(sampled);
    }
    frontier = std::move(next);
  }
  out.points = std::move(frontier);
  return out;
}

int SpanTree::add_node(const BerkPoint& p, int parent) {
  nodes_.push_back(Node{p, parent, {}});
  int id = static_cast<int>(nodes_.size()) - 1;
  if (parent >= 0) nodes_[parent].children.push_back(id);
  return id;
}

void SpanTree::insert(const BerkPoint& x) {
  if (x.is_infinity()) {
    has_infinity_ = true;
    return;
  }
  if (root_ < 0) {
    root_ = add_node(x, -1);
    return;
  }
  if (same_point(nodes_[root_].point, x)) return;

  BerkPoint j = join(nodes_[root_].point, x);
  if (!same_point(j, nodes_[root_].point)) {
    // x escapes the current root disk: new root above it.
    int old_root = root_;
    if (same_point(j, x)) {
      root_ = add_node(x, -1);
    } else {
      root_ = add_node(j, -1);
      add_node(x, root_);
    }
    nodes_[old_root].parent = root_;
    nodes_[root_].children.insert(nodes_[root_].children.begin(), old_root);
    return;
  }

  auto replace_child = [this](int parent, int old_child, int new_child) {
    for (auto& k : nodes_[parent].children)
      if (k == old_child) {
        k = new_child;
        break;
      }
  };

  int v = root_;
  while (true) {
    // Decide the relationship to each child before any mutation.
    int descend_to = -1;
    int branch_child = -1;
    BerkPoint branch_join = x;
    const std::vector<int> kids = nodes_[v].children;
    for (int c : kids) {
      BerkPoint jc = join(nodes_[c].point, x);
      if (same_point(jc, nodes_[c].point)) {
        if (same_point(nodes_[c].point, x)) return;  // duplicate
        descend_to = c;
        break;
      }
      if (!same_point(jc, nodes_[v].point)) {
        branch_child = c;
        branch_join = jc;
        break;
      }
    }
    if (descend_to >= 0) {
      v = descend_to;
      continue;
    }
    if (branch_child >= 0) {
      // x branches off strictly below v in the direction of branch_child.
      int c = branch_child;
      if (same_point(branch_join, x)) {
        int xn = add_node(x, -1);
        nodes_[xn].parent = v;
        replace_child(v, c, xn);
        nodes_[xn].children.push_back(c);
        nodes_[c].parent = xn;
      } else {
        int jn = add_node(branch_join, -1);
        nodes_[jn].parent = v;
        replace_child(v, c, jn);
        nodes_[jn].children.push_back(c);
        nodes_[c].parent = jn;
        int xn = add_node(x, -1);
        nodes_[xn].parent = jn;
        nodes_[jn].children.push_back(xn);
      }
      return;
    }
    add_node(x, v);  // a fresh direction at v
    return;
  }
}

bool SpanTree::on_span(const BerkPoint& m) const {
  if (root_ < 0) return false;
  if (m.is_infinity()) return has_infinity_;
  if (has_infinity_ && disk_contains(m, nodes_[root_].point)) return true;
  for (const auto& n : nodes_) {
    if (same_point(n.point, m)) return true;
    if (n.parent >= 0 && disk_contains(nodes_[n.parent].point, m) &&
        disk_contains(m, n.point))
      return true;
  }
  return false;
}

std::vector<int> SpanTree::branch_vertices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].children.size() >= 2) out.push_back(static_cast<int>(i));
  return out;
}

std::size_t SpanTree::leaf_count() const {
  std::size_t c = 0;
  for (const auto& n : nodes_)
    if (n.children.empty()) ++c;
  return c;
}

SpanTree julia_span(const std::vector<BerkPoint>& points) {
  // Deduplicate first so a repeated point does not masquerade as a pair.
  std::vector<BerkPoint> distinct;
  for (const auto& p : points) {
    bool seen = false;
    for (const auto& q : distinct)
      if (same_point(p, q)) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(p);
  }
  if (distinct.size() < 2)
    throw Error(ErrorKind::InvalidInput,
                "span needs at least two distinct points");
  SpanTree tree;
  for (const auto& p : distinct) tree.insert(p);
  return tree;
}

SpanTree julia_span(const WeightedPointSet& S) {
  std::vector<BerkPoint> pts;
  pts.reserve(S.points.size());
  for (const auto& [p, m] : S.points) pts.push_back(p);
  return julia_span(pts);
}

QuadraticFixedPoints quadratic_julia_fixed_points(const RationalMapK& f) {
  if (f.degree() != 2 || !f.is_polynomial())
    throw Error(ErrorKind::InvalidInput,
                "itineraries implemented for quadratic polynomials only");
  // Fixed points: num(z) - z den(z) = 0; for a polynomial this is quadratic.
  PSPoly P{f.num()[0], f.num()[1] - f.den()[0], f.num()[2]};
  auto roots = newton_puiseux(P, min_coeff_precision(P));
  std::vector<PuiseuxSeries> fixed;
  for (const auto& r : roots)
    for (long long i = 0; i < r.multiplicity; ++i) fixed.push_back(r.root);
  if (fixed.size() != 2)
    throw Error(ErrorKind::SolverFailure, "expected two finite fixed points");
  Complex c0 = fixed[0].constant_term();
  Complex c1 = fixed[1].constant_term();
  if (std::abs(c0 - c1) < 1e-9)
    throw Error(ErrorKind::Precondition,
                "fixed points collide at t=0; no itinerary structure");
  bool first_plus = (c0.imag() > c1.imag()) ||
                    (c0.imag() == c1.imag() && c0.real() > c1.real());
  QuadraticFixedPoints out{first_plus ? fixed[0] : fixed[1],
                           first_plus ? fixed[1] : fixed[0]};
  return out;
}

std::vector<int> symbol_itinerary(const RationalMapK& f, const PuiseuxSeries& z,
                                  long long n) {
  return symbol_itinerary(f, quadratic_julia_fixed_points(f), z, n);
}

std::vector<int> symbol_itinerary(const RationalMapK& f,
                                  const QuadraticFixedPoints& fp,
                                  const PuiseuxSeries& z, long long n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  PuiseuxSeries cur = z;
  for (long long i = 0; i < n; ++i) {
    PuiseuxSeries dp = cur - fp.x_plus;
    PuiseuxSeries dm = cur - fp.x_minus;
    if (dp.is_zero() || dp.valuation().value > Rat(0)) {
      out.push_back(+1);
    } else if (dm.is_zero() || dm.valuation().value > Rat(0)) {
      out.push_back(-1);
    } else {
      throw Error(ErrorKind::NotInJulia,
                  "orbit left the itinerary region at step " + std::to_string(i));
    }
    if (i + 1 < n) cur = f.eval(cur);
  }
  return out;
}

}  // namespace berklim
