#pragma once

// Generating functions F_nu^+(t,z), F_nu^-(t,z), their bilateral sum, the
// Fourier (Poisson-summation) form of the bilateral sum, the majorant of
// F_nu^+ on the positive axis and G_q^{(nu)}(t,z).

#include "qhz/qcore.hpp"

namespace qhz {

struct GenfunPoint {
  int nu = 1;
  Complex t;
  Complex z;
};

/// F_nu^+(t,z) = t^nu sum_{n>=0} q^{-nu(n+z)} exp(t [-(n+z)]_q), for t in the
/// sector R_q(z). Throws DomainError outside the sector or for z outside D_q.
SeriesValue F_plus(const GenfunPoint& p, const QContext& ctx);

/// F_nu^-(t,z) = t^nu sum_{n>=1} q^{nu(n-z)} exp(t [n-z]_q); entire in t.
SeriesValue F_minus(const GenfunPoint& p, const QContext& ctx);

/// F_nu = F_nu^+ + F_nu^-; periodic in z with period 1.
SeriesValue F_bilateral(const GenfunPoint& p, const QContext& ctx);

/// Fourier form of F_nu truncated to |m| <= max_mode:
///   -((1-q)^nu / log q) e^{t/(1-q)} sum_m ((1-q)/t)^{m delta}
///       Gamma(nu + m delta) e^{2 pi i m z}.
/// abs_err carries the Stirling tail bound of the omitted modes.
SeriesValue F_fourier(const GenfunPoint& p, int max_mode, const QContext& ctx);

/// Fourier form with the smallest truncation whose tail bound is below tol
/// (relative to the size of the m = 0 mode).
SeriesValue F_fourier(const GenfunPoint& p, const QContext& ctx,
                      double tol = 1e-16);

/// Smallest M whose Stirling tail bound for the modes |m| > M is below
/// tol * (size of the m = 0 mode).
int fourier_modes_needed(const GenfunPoint& p, double tol, const QContext& ctx);

/// Bound on the omitted modes |m| > max_mode of the Fourier form.
double fourier_tail_bound(const GenfunPoint& p, int max_mode,
                          const QContext& ctx);

/// Majorant of |F_nu^+(t,z)| for real t > 0 and z in J_q:
///   exp(-t (b q^{-x} - 1)/(1-q)) { t^nu q^{-nu x}
///       + (nu e^{-1} / b)^nu / (1 - exp(-t b q^{-x})) },  b = cos(y log q).
double bound_F_plus(const GenfunPoint& p, const QContext& ctx);

/// G_q^{(nu)}(t,z) = -((1-q)^nu / log q) (nu-1)! e^{t/(1-q)} - F_nu^-(t,z).
/// When that cancels badly (Re t/(1-q) > 25) and t lies in the sector, it is
/// evaluated as F_nu^+ minus the non-constant Fourier modes instead.
SeriesValue G_q(const GenfunPoint& p, const QContext& ctx);

}  // namespace qhz
