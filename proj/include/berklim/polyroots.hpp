#pragma once

#include <complex>
#include <vector>

namespace berklim {

using CPoly = std::vector<std::complex<double>>;  // ascending powers

std::complex<double> cpoly_eval(const CPoly& p, std::complex<double> z);

// All roots of a complex polynomial, counted with multiplicity (multiple
// roots appear as repeated entries). Closed form up to degree 2, otherwise
// Durand-Kerner with Newton polishing. Leading coefficients below `trim_tol`
// relative to the largest coefficient are trimmed (degree drop).
std::vector<std::complex<double>> cpoly_roots(const CPoly& p,
                                              double trim_tol = 1e-12);

// Greedy clustering of a root list into (representative, multiplicity) pairs;
// tol is an absolute distance scaled by max(1, |root|).
struct RootCluster {
  std::complex<double> value;
  long long multiplicity;
};
std::vector<RootCluster> cluster_roots(const std::vector<std::complex<double>>& roots,
                                       double tol = 1e-6);

// One Newton step at a time until |p(z)| < tol or max_iter; returns refined z.
std::complex<double> polish_root(const CPoly& p, std::complex<double> z,
                                 double tol = 1e-12, int max_iter = 50);

}  // namespace berklim
