#pragma once

// Z_q(s,t) = prod_{l>=0} (1 - q^{t+l})^{-C(s+l-1,l)}, its logarithm as a
// q-series, Appell's O-function at unit weights, the ladder relations and
// the recurrences they induce on zeta_q^{(nu)}(s) = zeta_q(s, s-nu, 1).

#include <vector>

#include "qhz/qcore.hpp"
#include "qhz/report.hpp"

namespace qhz {

struct ProductValue {
  Complex log_value;
  Complex value;
  double abs_err = 0.0;  // on log_value
  std::size_t depth = 0;
};

/// log Z_q(s,t) = sum_{n>=1} q^{nt} (1-q^n)^{-s} / n, Re t > 0.
SeriesValue log_Z(Complex s, Complex t, const QContext& ctx);

/// The product truncated at l <= depth, accumulated as a sum of logarithms.
ProductValue Z_product(Complex s, Complex t, long depth, const QContext& ctx);

/// Truncation depth whose tail bound |C(s+L,L+1)| q^{Re t+L+1}/(1-q) is below
/// tol. Throws ConvergenceError past max_terms.
long Z_product_depth(Complex s, Complex t, double tol, const QContext& ctx);

/// Z_product with the depth from Z_product_depth(eps_term).
ProductValue Z_product(Complex s, Complex t, const QContext& ctx);

/// Z_q(-m,t) = prod_{l=0}^{m} (1-q^{t+l})^{(-1)^{l-1} C(m,l)}, m >= 1.
Complex Z_neg(int m, Complex t, const QContext& ctx);

/// O_q(t; 1_m) = prod over l in N^m of (1 - q^{|l| + t}), grouped by total
/// degree d <= max_degree with multiplicity C(d+m-1, m-1).
Complex appell_O(Complex t, int m, long max_degree, const QContext& ctx);

/// appell_O with the degree chosen from the tail bound.
Complex appell_O(Complex t, int m, const QContext& ctx);

/// Experimental: O_q(t; omega) for positive integer weights, grouping
/// lattice points by weighted degree (multiplicities by counting
/// compositions).
Complex appell_O_weighted(Complex t, const std::vector<int>& omega,
                          long max_degree, const QContext& ctx);

/// zeta_q^{(nu)}(s) = (1-q)^s sum_{n>=1} q^{n(s-nu)} (1-q^n)^{-s}, the
/// logarithmic derivative of Z_q at t = s-nu. Requires Re(s-nu) > 0.
SeriesValue zeta_from_Z(int nu, Complex s, const QContext& ctx);

/// The five ladder relations in log form. The relation for Z_q(s,t-m) is
/// included only when Re t > m.
std::vector<EvalReport> verify_ladders(Complex s, Complex t, int m,
                                       const QContext& ctx,
                                       double tol = 1e-9);

/// zeta^{(nu-m)}(s) = sum_{l=0}^{m} (-1)^l C(m,l) (1-q)^l zeta^{(nu-l)}(s-l),
/// 1 <= m <= nu-1, both sides via zeta_from_Z.
EvalReport verify_zeta_recurrences(int nu, int m, Complex s,
                                   const QContext& ctx, double tol = 1e-10);

/// zeta^{(nu)}(s,z) = zeta^{(nu-1)}(s,z) + (1-q) zeta^{(nu-1)}(s-1,z) with
/// the defining series, nu >= 2.
EvalReport verify_zeta_recurrence_z(int nu, Complex s, Complex z,
                                    const QContext& ctx, double tol = 1e-10);

}  // namespace qhz
