#pragma once

#include <cstddef>
#include <functional>

#include "qhz/qcore.hpp"

namespace qhz {

struct QuadratureResult {
  Complex value;
  double abs_err = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature of a complex-valued
/// integrand on [a, b]. Bisects the panel with the largest error estimate
/// until the summed estimate is below max(abs_tol, rel_tol * |I|). Throws
/// ConvergenceError once max_panels is exceeded.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, double abs_tol, double rel_tol = 0.0,
                           std::size_t max_panels = 4000);

}  // namespace qhz
