#include "qhz/qbernoulli.hpp"

#include <cmath>

#include "qhz/classical.hpp"
#include "quad.hpp"

namespace qhz {

namespace {

using detail::Quad;
using detail::QuadComplex;
using detail::QuadQ;

void require_args(int nu, int index, const char* who) {
  if (nu < 1) throw DomainError(std::string(who) + ": nu must be >= 1");
  if (index < 0) throw DomainError(std::string(who) + ": index must be >= 0");
}

Quad quad_binom(int n, int k) {
  if (k < 0 || k > n) return Quad(0);
  Quad r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Quad quad_factorial(int n) {
  Quad r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

QuadComplex ipow(const QuadComplex& b, int e) {
  QuadComplex r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<QuadComplex> btilde_quad(int nu, int n_max, Complex z,
                                     const QContext& ctx) {
  const QuadQ qq(ctx);
  const QuadComplex zq = detail::to_quad(z);
  std::vector<QuadComplex> b(static_cast<std::size_t>(n_max) + 1);
  b[0] = QuadComplex(-boost::multiprecision::pow(qq.one_minus_q, nu) /
                     qq.log_q * quad_factorial(nu - 1));
  const QuadComplex lead_pow = qq.pow(Quad(nu) * (Quad(1) - zq));
  const QuadComplex bracket = qq.one_minus_pow(Quad(1) - zq) / qq.one_minus_q;
  const Quad nu_fact = quad_factorial(nu);
  for (int n = 1; n <= n_max; ++n) {
    QuadComplex rhs(0);
    if (n >= nu) {
      rhs = nu_fact * quad_binom(n, nu) * lead_pow * ipow(bracket, n - nu);
    }
    Quad q_m = 1;
    for (int m = 0; m < n; ++m) {
      const Quad c = quad_binom(n, m) * q_m;
      rhs -= (m % 2 == 0 ? c : -c) * b[m];
      q_m *= qq.q;
    }
    // (-1)^n (q^n - 1) = (-1)^{n+1} (1 - q^n)
    const Quad denom = (n % 2 == 0 ? Quad(-1) : Quad(1)) *
                       (Quad(1) - boost::multiprecision::pow(qq.q, n));
    b[n] = rhs / denom;
  }
  return b;
}

// (-1)^{m-1} (1-q)^{1-m} = (q-1)^{1-m}
Quad signed_scale(int m, const QuadQ& qq) {
  const Quad mag = boost::multiprecision::pow(qq.one_minus_q, 1 - m);
  return (m % 2 == 1) ? mag : -mag;
}

Complex normalize(int nu, int m, const QuadComplex& btilde) {
  // (-1)^{nu-1} m! / (m+nu-1)!
  Quad f = 1;
  for (int i = m + 1; i <= m + nu - 1; ++i) f /= i;
  if ((nu - 1) % 2 == 1) f = -f;
  return detail::to_double(f * btilde);
}

}  // namespace

std::vector<Complex> btilde_sequence(int nu, int n_max, Complex z,
                                     const QContext& ctx) {
  require_args(nu, n_max, "btilde_sequence");
  const auto b = btilde_quad(nu, n_max, z, ctx);
  std::vector<Complex> out;
  out.reserve(b.size());
  for (const auto& v : b) out.push_back(detail::to_double(v));
  return out;
}

Complex btilde_recursive(int nu, int n, Complex z, const QContext& ctx) {
  require_args(nu, n, "btilde_recursive");
  return detail::to_double(btilde_quad(nu, n, z, ctx).back());
}

std::vector<Complex> gq_taylor_coefficients(int nu, int k_max, Complex z,
                                            const QContext& ctx) {
  require_args(nu, k_max, "gq_taylor_coefficients");
  const QuadQ qq(ctx);
  const QuadComplex zq = detail::to_quad(z);
  const int j_max = k_max - nu;

  // S_j = sum_{n>=1} q^{nu(n-z)} [n-z]_q^j
  std::vector<QuadComplex> sums(static_cast<std::size_t>(std::max(j_max, 0)) + 1,
                                QuadComplex(0));
  if (j_max >= 0) {
    const Quad tiny("1e-36");
    for (long n = 1;; ++n) {
      const QuadComplex w = Quad(n) - zq;
      const QuadComplex weight = qq.pow(Quad(nu) * w);
      const QuadComplex bracket = qq.one_minus_pow(w) / qq.one_minus_q;
      QuadComplex term = weight;
      bool small = n > 2;
      for (int j = 0; j <= j_max; ++j) {
        sums[j] += term;
        if (detail::quad_abs(term) > tiny * detail::quad_abs(sums[j])) {
          small = false;
        }
        term *= bracket;
      }
      if (small) break;
      if (n > static_cast<long>(ctx.max_terms())) {
        throw ConvergenceError("gq_taylor_coefficients: no convergence");
      }
    }
  }

  const Quad c = Quad(1) / qq.one_minus_q;
  const Quad lead = -boost::multiprecision::pow(qq.one_minus_q, nu) /
                    qq.log_q * quad_factorial(nu - 1);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  Quad exp_coeff = 1;  // c^k / k!
  Quad inv_fact_j = 1;  // 1 / (k-nu)!
  for (int k = 0; k <= k_max; ++k) {
    QuadComplex v(lead * exp_coeff);
    if (k >= nu) {
      const int j = k - nu;
      if (j > 0) inv_fact_j /= j;
      v -= sums[j] * inv_fact_j;
    }
    out.push_back(detail::to_double(v));
    exp_coeff = exp_coeff * c / (k + 1);
  }
  return out;
}

Complex b_value(int nu, int m, Complex z, const QContext& ctx) {
  require_args(nu, m, "b_value");
  const QuadQ qq(ctx);
  const QuadComplex zq = detail::to_quad(z);
  QuadComplex sum(0);
  for (int l = 1; l <= m; ++l) {
    const int k = l + nu - 1;
    const Quad c = quad_binom(m, l) * l;
    const QuadComplex term = qq.pow(-zq * Quad(k)) /
                             qq.one_minus_pow(QuadComplex(Quad(-k)));
    sum += (l % 2 == 0 ? c : -c) * term;
  }
  sum += Quad(1) / (quad_binom(m + nu - 1, nu - 1) * qq.log_q);
  return detail::to_double(signed_scale(m, qq) * sum);
}

Complex b_value_recursive(int nu, int m, Complex z, const QContext& ctx) {
  require_args(nu, m, "b_value_recursive");
  return normalize(nu, m, btilde_quad(nu, m + nu - 1, z, ctx).back());
}

QPolynomial b_closed_poly(int nu, int m, const QContext& ctx) {
  require_args(nu, m, "b_closed_poly");
  const QuadQ qq(ctx);
  const Quad scale = signed_scale(m, qq);
  QPolynomial poly;
  poly.nu = nu;
  poly.m = m;
  for (int l = 1; l <= m; ++l) {
    const int k = l + nu - 1;
    const Quad c = (l % 2 == 0 ? Quad(1) : Quad(-1)) * quad_binom(m, l) * l;
    const Quad denom = Quad(1) - boost::multiprecision::exp(-Quad(k) * qq.log_q);
    poly.terms[k] = Complex(static_cast<double>(scale * c / denom), 0.0);
  }
  poly.log_term = Complex(
      static_cast<double>(scale / quad_binom(m + nu - 1, nu - 1)), 0.0);
  return poly;
}

Complex QPolynomial::eval(Complex z, const QContext& ctx) const {
  const QuadQ qq(ctx);
  const QuadComplex zq = detail::to_quad(z);
  QuadComplex sum = detail::to_quad(log_term) / qq.log_q;
  for (const auto& [k, c] : terms) {
    sum += detail::to_quad(c) * qq.pow(-zq * Quad(k));
  }
  return detail::to_double(sum);
}

double b_classical_limit_error(int nu, int m, Complex z, int k) {
  if (k < 1) throw DomainError("b_classical_limit_error: k must be >= 1");
  const QContext ctx(1.0 - std::ldexp(1.0, -k));
  return std::abs(b_value(nu, m, z, ctx) - bernoulli_poly(m, z));
}

}  // namespace qhz
