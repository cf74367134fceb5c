#pragma once

// Classical targets of the q -> 1 limit: Bernoulli numbers and polynomials,
// their generating function and the Hurwitz zeta function.

#include <vector>

#include "qhz/qcore.hpp"

namespace qhz {

/// Monomial coefficients of B_0(z), ..., B_max_degree(z):
/// coefficients[m][j] multiplies z^j.
struct BernoulliTable {
  int max_degree = 0;
  std::vector<std::vector<double>> coefficients;

  static BernoulliTable build(int max_degree);
  Complex eval(int m, Complex z) const;
};

/// Bernoulli number B_m with B_1 = -1/2, from sum_{k<=m} C(m+1,k) B_k = 0.
double bernoulli_number(int m);

/// B_m(z) = sum_k C(m,k) B_k z^{m-k}.
Complex bernoulli_poly(int m, Complex z);

/// G(t,z) = t e^{(1-z)t} / (e^t - 1) = sum_m (-1)^m B_m(z) t^m / m!.
/// Uses the Taylor head for |t| < 1e-6. Throws DomainError at the poles
/// t = 2 pi i k, k != 0.
Complex classical_G(Complex t, Complex z);

/// Hurwitz zeta sum_{n>=0} (n+z)^{-s} by Euler-Maclaurin summation with ten
/// Bernoulli correction terms, continued to all s != 1. Requires Re z > 0.
/// Throws NearPoleError within pole_guard of s = 1.
SeriesValue hurwitz_zeta(Complex s, Complex z,
                         double pole_guard = QContext::kDefaultPoleGuard);

}  // namespace qhz
