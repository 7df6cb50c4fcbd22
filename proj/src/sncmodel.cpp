#include "berklim/sncmodel.hpp"

#include <algorithm>

namespace berklim {

SncModel SncModel::create(std::vector<Divisor> divisors) {
  if (divisors.empty())
    throw Error(ErrorKind::SncViolation, "a model needs at least one divisor");
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    auto& d = divisors[i];
    if (!d.eta.is_type2())
      throw Error(ErrorKind::SncViolation,
                  "divisorial points must be type 2 (divisor " +
                      std::to_string(i) + ")");
    if (d.multiplicity < 1)
      throw Error(ErrorKind::SncViolation, "multiplicities must be positive");
    if (d.name.empty()) d.name = "E" + std::to_string(i);
    if (d.eta.q().denominator() != 1 &&
        d.multiplicity % d.eta.q().denominator() != 0)
      throw Error(ErrorKind::SncViolation,
                  "divisor " + d.name + ": radius exponent " +
                      to_string(d.eta.q()) + " needs multiplicity divisible by " +
                      std::to_string(d.eta.q().denominator()));
  }
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      if (divisors[i].name == divisors[j].name)
        throw Error(ErrorKind::SncViolation,
                    "duplicate divisor name " + divisors[i].name);
      if (same_point(divisors[i].eta, divisors[j].eta))
        throw Error(ErrorKind::SncViolation,
                    "duplicate divisorial point (" + divisors[i].name + ", " +
                        divisors[j].name + ")");
    }

  // snc validity: the divisor set must be closed under joins, otherwise the
  // missing branch vertex witnesses a non-snc configuration.
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      BerkPoint bj = join(divisors[i].eta, divisors[j].eta);
      bool found = false;
      for (const auto& d : divisors)
        if (same_point(d.eta, bj)) {
          found = true;
          break;
        }
      if (!found)
        throw Error(ErrorKind::SncViolation,
                    "snc violation: branch vertex " + bj.str() +
                        " of divisors " + divisors[i].name + ", " +
                        divisors[j].name + " is not a divisor");
    }

  SncModel X;
  X.divisors_ = std::move(divisors);
  const auto& ds = X.divisors_;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      bool open_arc_clear = true;
      for (std::size_t k = 0; k < ds.size() && open_arc_clear; ++k) {
        if (k == i || k == j) continue;
        if (path_contains(ds[i].eta, ds[j].eta, ds[k].eta)) open_arc_clear = false;
      }
      // Adjacent only when the arc is a chain edge: the join must be one of
      // the endpoints (guaranteed by join-closedness plus clearness).
      if (open_arc_clear)
        X.adjacency_.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return X;
}

SncModel SncModel::trivial() {
  return create({Divisor{"E", BerkPoint::gauss(), 1}});
}

SncModel SncModel::minimal_at(const BerkPoint& eta, std::string name) {
  if (!eta.is_type2())
    throw Error(ErrorKind::InvalidInput, "minimal models sit at type-2 points");
  return create({Divisor{std::move(name), eta, eta.q().denominator()}});
}

int SncModel::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i].name == name) return static_cast<int>(i);
  return -1;
}

int SncModel::find_divisor(const BerkPoint& p) const {
  if (!p.is_type2()) return -1;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (same_point(divisors_[i].eta, p)) return static_cast<int>(i);
  return -1;
}

bool SncModel::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& [a, b] : adjacency_)
    if (a == i && b == j) return true;
  return false;
}

SncModel SncModel::add_divisor(const BerkPoint& eta, long long multiplicity,
                               std::string name) const {
  auto ds = divisors_;
  if (name.empty()) name = "E" + std::to_string(ds.size());
  ds.push_back(Divisor{std::move(name), eta, multiplicity});
  return create(std::move(ds));
}

SncModel SncModel::remove_divisor(const std::string& name) const {
  int idx = index_of(name);
  if (idx < 0)
    throw Error(ErrorKind::InvalidInput, "no divisor named " + name);
  if (divisors_.size() == 1)
    throw Error(ErrorKind::SncViolation,
                "cannot remove the last divisor of a model");
  auto ds = divisors_;
  ds.erase(ds.begin() + idx);
  return create(std::move(ds));
}

bool SncModel::is_contraction_of(const SncModel& X) const {
  for (const auto& d : divisors_) {
    int i = X.find_divisor(d.eta);
    if (i < 0 || X.divisors()[i].multiplicity != d.multiplicity) return false;
  }
  return true;
}

ReductionTarget ReductionTarget::node(int i, int j) {
  if (i > j) std::swap(i, j);
  return {Kind::Node, i, j, {}};
}

std::string ReductionTarget::str(const SncModel& X) const {
  switch (kind) {
    case Kind::Generic:
      return "generic(" + X.divisors()[i].name + ")";
    case Kind::Smooth:
      return "smooth(" + X.divisors()[i].name + ", " + label.str() + ")";
    case Kind::Node:
      return "node(" + X.divisors()[i].name + ", " + X.divisors()[j].name + ")";
  }
  return "?";
}

bool same_target(const ReductionTarget& a, const ReductionTarget& b, double tol) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ReductionTarget::Kind::Generic: return a.i == b.i;
    case ReductionTarget::Kind::Node: return a.i == b.i && a.j == b.j;
    case ReductionTarget::Kind::Smooth:
      return a.i == b.i && same_label(a.label, b.label, tol);
  }
  return false;
}

ReductionTarget reduce(const SncModel& X, const BerkPoint& x) {
  int self = X.find_divisor(x);
  if (self >= 0) return ReductionTarget::generic(self);

  // B(x): divisors whose arc to x passes no other divisor.
  std::vector<int> boundary;
  const auto& ds = X.divisors();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    bool clear = true;
    for (std::size_t j = 0; j < ds.size() && clear; ++j) {
      if (j == i) continue;
      if (path_contains(x, ds[i].eta, ds[j].eta)) clear = false;
    }
    if (clear) boundary.push_back(static_cast<int>(i));
  }
  if (boundary.size() == 1) {
    int i = boundary[0];
    return ReductionTarget::smooth(i, tangent_label(ds[i].eta, x));
  }
  if (boundary.size() == 2) {
    int i = boundary[0], j = boundary[1];
    if (!X.adjacent(i, j))
      throw Error(ErrorKind::SncViolation,
                  "internal invariant: node components are not adjacent");
    return ReductionTarget::node(i, j);
  }
  throw Error(ErrorKind::SncViolation,
              "internal invariant: point borders " +
                  std::to_string(boundary.size()) + " components");
}

Rat AtomicMeasure::total_mass() const {
  Rat s(0);
  for (const auto& a : atoms) s += a.mass;
  return s;
}

Rat AtomicMeasure::mass_of(const ReductionTarget& t, double tol) const {
  for (const auto& a : atoms)
    if (same_target(a.target, t, tol)) return a.mass;
  return Rat(0);
}

AtomicMeasure pushforward(const SncModel& X,
                          const std::vector<std::pair<BerkPoint, Rat>>& mu) {
  AtomicMeasure out;
  for (const auto& [p, mass] : mu) {
    if (X.find_divisor(p) >= 0)
      throw Error(ErrorKind::MassOnDivisor,
                  "measure has mass on divisorial point " + p.str());
    ReductionTarget t = reduce(X, p);
    bool merged = false;
    for (auto& a : out.atoms)
      if (same_target(a.target, t)) {
        a.mass += mass;
        merged = true;
        break;
      }
    if (!merged) out.atoms.push_back({t, mass});
  }
  return out;
}

AtomicMeasure pushforward(const SncModel& X, const WeightedPointSet& mu) {
  AtomicMeasure out = pushforward(X, mu.points);
  out.depth = mu.depth;
  out.stochastic = mu.stochastic;
  out.prng_seed = mu.prng_seed;
  return out;
}

namespace {

// A witness point strictly between two adjacent divisorial points. Adjacent
// divisors of a valid model are nested, so the open arc is a radius segment.
BerkPoint arc_midpoint(const BerkPoint& a, const BerkPoint& b) {
  const BerkPoint& outer = disk_contains(a, b) ? a : b;
  const BerkPoint& inner = disk_contains(a, b) ? b : a;
  Rat qm = (outer.q() + inner.q()) / 2;
  return BerkPoint::type2(inner.center(), qm);
}

}  // namespace

ReductionTarget contraction_target_map(const SncModel& X, const SncModel& Y,
                                       const ReductionTarget& t) {
  if (!Y.is_contraction_of(X))
    throw Error(ErrorKind::InvalidInput, "Y is not a contraction of X");
  const auto& ds = X.divisors();
  switch (t.kind) {
    case ReductionTarget::Kind::Generic: {
      int yi = Y.find_divisor(ds[t.i].eta);
      if (yi >= 0) return ReductionTarget::generic(yi);
      return reduce(Y, ds[t.i].eta);
    }
    case ReductionTarget::Kind::Smooth: {
      int yi = Y.find_divisor(ds[t.i].eta);
      if (yi >= 0) return ReductionTarget::smooth(yi, t.label);
      // The whole component at the contracted divisor maps to one point.
      return reduce(Y, ds[t.i].eta);
    }
    case ReductionTarget::Kind::Node: {
      int yi = Y.find_divisor(ds[t.i].eta);
      int yj = Y.find_divisor(ds[t.j].eta);
      if (yi >= 0 && yj >= 0) return ReductionTarget::node(yi, yj);
      return reduce(Y, arc_midpoint(ds[t.i].eta, ds[t.j].eta));
    }
  }
  throw Error(ErrorKind::InvalidInput, "unknown target kind");
}

bool check_compatibility(const SncModel& X, const SncModel& Y,
                         const std::vector<BerkPoint>& samples,
                         std::string* witness) {
  for (const auto& x : samples) {
    // Divisorial points of X are outside the domain of the contracted
    // reduction; skip those that are not also Y-divisors.
    if (X.find_divisor(x) >= 0 && Y.find_divisor(x) < 0) continue;
    ReductionTarget lhs = contraction_target_map(X, Y, reduce(X, x));
    ReductionTarget rhs = reduce(Y, x);
    if (!same_target(lhs, rhs)) {
      if (witness)
        *witness = "x = " + x.str() + ": pi(red_X(x)) = " + lhs.str(Y) +
                   " but red_Y(x) = " + rhs.str(Y);
      return false;
    }
  }
  return true;
}

Mobius minimal_model_conjugation(const BerkPoint& eta, long long ram_cap) {
  if (!eta.is_type2())
    throw Error(ErrorKind::InvalidInput, "minimal models sit at type-2 points");
  const Rat& q = eta.q();
  if (q.denominator() > ram_cap)
    throw Error(ErrorKind::RamificationCap,
                "chart needs ramification " + std::to_string(q.denominator()) +
                    " beyond cap " + std::to_string(ram_cap));
  PuiseuxSeries scale = PuiseuxSeries::monomial(Complex(1.0, 0.0), -q);
  return Mobius::affine(scale, -(eta.center() * scale));
}

}  // namespace berklim
