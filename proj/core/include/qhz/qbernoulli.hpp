#pragma once

// q-Bernoulli polynomials attached to G_q^{(nu)}(t,z): the unnormalized
// coefficients Btilde_n^{(nu)}(z;q) by recursion, the normalized
// B_m^{(nu)}(z;q) by closed form, and its structure as a polynomial in q^{-z}.

#include <map>
#include <vector>

#include "qhz/qcore.hpp"

namespace qhz {

/// Btilde_n^{(nu)}(z;q), solving the q-difference recursion upward from
/// Btilde_0 = -((1-q)^nu / log q) (nu-1)!.
Complex btilde_recursive(int nu, int n, Complex z, const QContext& ctx);

/// Btilde_0 .. Btilde_{n_max} from one pass of the recursion.
std::vector<Complex> btilde_sequence(int nu, int n_max, Complex z,
                                     const QContext& ctx);

/// Taylor coefficients c_k = (-1)^k Btilde_k / k! of G_q^{(nu)}(t,z) for
/// k = 0..k_max, read off the closed form of G_q (no recursion).
std::vector<Complex> gq_taylor_coefficients(int nu, int k_max, Complex z,
                                            const QContext& ctx);

/// B_m^{(nu)}(z;q) = (-1)^{nu-1} m!/(m+nu-1)! Btilde_{m+nu-1}, from the
/// closed form in powers of q^{-z}.
Complex b_value(int nu, int m, Complex z, const QContext& ctx);

/// The same normalization applied to the recursion output.
Complex b_value_recursive(int nu, int m, Complex z, const QContext& ctx);

/// B_m^{(nu)}(z;q) = sum_k c_k (q^{-z})^k + log_term / log q.
struct QPolynomial {
  int nu = 1;
  int m = 0;
  std::map<int, Complex> terms;
  Complex log_term;

  Complex eval(Complex z, const QContext& ctx) const;
};

QPolynomial b_closed_poly(int nu, int m, const QContext& ctx);

/// |B_m^{(nu)}(z; 1 - 2^{-k}) - B_m(z)|.
double b_classical_limit_error(int nu, int m, Complex z, int k);

}  // namespace qhz
