#pragma once

// The q-Hurwitz zeta function zeta_q^{(nu)}(s,z) = zeta_q(s, s-nu, z): the
// defining Dirichlet-type series, the binomial-series continuation, the
// Mellin integral, the integral representation with Taylor subtraction,
// the auxiliary integral phi_m^{(nu)}, poles, residues and special values.

#include <optional>
#include <string>
#include <vector>

#include "qhz/qcore.hpp"

namespace qhz {

enum class ZetaMethod { direct, binomial, mellin, integral_rep };

std::string to_string(ZetaMethod m);
/// Accepts "direct", "binomial", "mellin", "integral-rep" / "integral_rep".
std::optional<ZetaMethod> parse_zeta_method(const std::string& name);

struct ZetaQuery {
  int nu = 1;
  Complex s;
  Complex z{1.0, 0.0};
  ZetaMethod method = ZetaMethod::binomial;
};

/// zeta_q(s,t,z) = sum_{n>=0} q^{(n+z)t} / [n+z]_q^s for Re t > 0, Re z > 0.
SeriesValue zeta_q_general(Complex s, Complex t, Complex z,
                           const QContext& ctx);

/// The defining series; requires Re s > nu and Re z > 0.
SeriesValue zeta_nu_direct(const ZetaQuery& query, const QContext& ctx);

enum class PoleCheck { enforce, skip };

/// (1-q)^s sum_{l>=0} C(s+l-1,l) q^{z(s-nu+l)} / (1 - q^{s-nu+l}), valid for
/// all s off the pole lattice; requires Re z > 0. Evaluated in binary128.
SeriesValue zeta_nu_binomial(const ZetaQuery& query, const QContext& ctx,
                             PoleCheck check = PoleCheck::enforce);

/// (1/Gamma(s)) int_0^inf t^{s-nu-1} F_nu^+(t,z) dt; requires Re s > nu+1
/// and z in J_q. The range is split at a_split.
SeriesValue zeta_nu_mellin(const ZetaQuery& query, double a_split,
                           const QContext& ctx);

/// phi_m^{(nu)}(s;a,q) = int_0^a t^{s-nu-1-m delta} e^{t/(1-q)} dt, continued
/// meromorphically by integration by parts. Throws NearPoleError within
/// pole_guard of s = n + m delta, n <= nu.
Complex phi(int nu, long m, Complex s, double a, const QContext& ctx);

/// Integral representation with the Taylor head of G_q up to degree
/// N+nu-1 subtracted on [0,1]; valid for Re s > 1-N, z in J_q.
SeriesValue zeta_nu_integral_rep(const ZetaQuery& query, int N,
                                 const QContext& ctx);

/// Smallest N with Re s > 1 - N (at least 1).
int integral_rep_order(Complex s);

/// Dispatch on query.method with default auxiliary parameters
/// (a_split = 1, N = integral_rep_order(s)).
SeriesValue zeta_nu(const ZetaQuery& query, const QContext& ctx);

/// Pole set: n <= nu, and m != 0 whenever n <= 0.
bool is_pole_index(int nu, int n, long m);

/// -C(nu-1+m delta, nu-n) (1-q)^{n+m delta} / log q * e^{2 pi i m z}.
Complex pole_residue(int nu, int n, long m, Complex z, const QContext& ctx);

/// All poles with n in [n_lo, n_hi], m in [m_lo, m_hi].
std::vector<PoleDescriptor> poles(int nu, int n_lo, int n_hi, long m_lo,
                                  long m_hi, Complex z, const QContext& ctx);

/// The pole whose real and imaginary offsets from s are both below
/// pole_guard, if any.
std::optional<PoleDescriptor> pole_near(int nu, Complex s, Complex z,
                                        const QContext& ctx);

/// -B_m^{(nu)}(z;q) / m, the value at s = 1-m; m >= 1.
Complex special_value(int nu, int m, Complex z, const QContext& ctx);

/// Richardson extrapolation of (s-s0) zeta_nu_binomial(s) along
/// s = s0 + h, h in {1e-2, 5e-3, 2.5e-3}.
Complex residue_numeric(int nu, int n, long m, Complex z, const QContext& ctx);

struct LimitRow {
  int k = 0;
  double q = 0.0;
  Complex q_value;
  Complex classical_value;
  double abs_error = 0.0;
};

/// zeta_q^{(nu)}(s,z) at q = 1 - 2^{-k} against zeta(s,z), for k from
/// min(3, k_max) to k_max. Requires s not in {1..nu}, Re z > 0.
std::vector<LimitRow> classical_limit_sweep(int nu, Complex s, Complex z,
                                            int k_max);

/// The error column of classical_limit_sweep.
std::vector<double> classical_limit_check(int nu, Complex s, Complex z,
                                          int k_max);

}  // namespace qhz
