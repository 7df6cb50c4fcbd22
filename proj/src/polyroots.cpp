#include "berklim/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include "berklim/errors.hpp"

namespace berklim {

using C = std::complex<double>;

C cpoly_eval(const CPoly& p, C z) {
  C acc(0.0, 0.0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

namespace {

C cpoly_deriv_eval(const CPoly& p, C z) {
  C acc(0.0, 0.0);
  for (std::size_t k = p.size(); k-- > 1;)
    acc = acc * z + static_cast<double>(k) * p[k];
  return acc;
}

CPoly trim_leading(const CPoly& p, double trim_tol) {
  double maxmag = 0.0;
  for (const auto& c : p) maxmag = std::max(maxmag, std::abs(c));
  if (maxmag == 0.0) return {};
  CPoly q = p;
  while (q.size() > 1 && std::abs(q.back()) < trim_tol * maxmag) q.pop_back();
  return q;
}

}  // namespace

C polish_root(const CPoly& p, C z, double tol, int max_iter) {
  for (int i = 0; i < max_iter; ++i) {
    C f = cpoly_eval(p, z);
    if (std::abs(f) < tol) break;
    C df = cpoly_deriv_eval(p, z);
    if (std::abs(df) < 1e-300) break;  // multiple root; Newton stalls here
    z -= f / df;
  }
  return z;
}

std::vector<C> cpoly_roots(const CPoly& p_in, double trim_tol) {
  CPoly p = trim_leading(p_in, trim_tol);
  if (p.size() <= 1) return {};
  const std::size_t d = p.size() - 1;

  if (d == 1) return {-p[0] / p[1]};
  if (d == 2) {
    // stable quadratic formula
    C a = p[2], b = p[1], c = p[0];
    C disc = std::sqrt(b * b - 4.0 * a * c);
    C q = (std::abs(b + disc) >= std::abs(b - disc)) ? -0.5 * (b + disc)
                                                     : -0.5 * (b - disc);
    if (std::abs(q) < 1e-300) return {C(0, 0), C(0, 0)};
    return {q / a, c / q};
  }

  // Durand-Kerner for d >= 3.
  // Initial guesses on a circle whose radius tracks the root magnitudes.
  double radius = 0.0;
  for (std::size_t k = 0; k < d; ++k)
    radius = std::max(radius,
                      2.0 * std::pow(std::abs(p[k] / p[d]), 1.0 / double(d - k)));
  if (radius == 0.0) radius = 1.0;
  std::vector<C> z(d);
  const C seed(0.4, 0.9);
  C g(1.0, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    g *= seed;
    z[i] = radius * g / std::abs(g) * std::pow(0.5 + double(i) / double(d), 0.3);
  }

  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      C num = cpoly_eval(p, z[i]) / p[d];
      C den(1.0, 0.0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) < 1e-300) {
        z[i] += C(1e-8, 1e-8);
        max_step = 1.0;
        continue;
      }
      C step = num / den;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-14 * std::max(1.0, radius)) break;
  }
  for (auto& r : z) r = polish_root(p, r);
  return z;
}

std::vector<RootCluster> cluster_roots(const std::vector<C>& roots, double tol) {
  std::vector<RootCluster> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    C sum = roots[i];
    long long count = 1;
    used[i] = true;
    double scale = std::max(1.0, std::abs(roots[i]));
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(roots[j] - roots[i]) < tol * scale) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    }
    out.push_back({sum / static_cast<double>(count), count});
  }
  return out;
}

}  // namespace berklim
