#include "qhz/zqprod.hpp"

#include "qhz/qzeta.hpp"

namespace qhz {

namespace {

void require_right_half(Complex t, const char* who) {
  if (!(t.real() > 0.0)) {
    throw DomainError(std::string(who) + ": requires Re t > 0");
  }
}

Complex log_one_minus_q_pow(Complex w, const QContext& ctx) {
  return qhz::log1p(-q_pow(w, ctx));
}


// sum_{l >= start} C(m+l-1,l) log Z_q(s-l,t). Each log Z_q(s-l,t) is
// sum_n w_n x_n^l with x_n = 1 - q^n, so the l-sum decays only
// algebraically; the part l >= start is taken per n by Euler-Maclaurin on
// g(l) = P(l) e^{lambda l}, P(l) = C(m+l-1,l), lambda = log x_n.
Complex ladder_down_tail(Complex s, Complex t, int m, long start,
                         const QContext& ctx) {
  // monomial coefficients of P(l) = (l+1)...(l+m-1)/(m-1)!
  std::vector<double> poly{1.0};
  for (int i = 1; i < m; ++i) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j] * i;
      next[j + 1] += poly[j];
    }
    poly = next;
  }
  for (double& c : poly) c /= factorial(m - 1);
  // derivatives of P at start
  const double x0 = static_cast<double>(start);
  std::vector<double> dP(7, 0.0);
  {
    std::vector<double> cur = poly;
    for (int k = 0; k < 7; ++k) {
      double v = 0.0;
      for (std::size_t j = cur.size(); j-- > 0;) v = v * x0 + cur[j];
      dP[k] = v;
      std::vector<double> d;
      for (std::size_t j = 1; j < cur.size(); ++j) d.push_back(cur[j] * j);
      if (d.empty()) d.push_back(0.0);
      cur = d;
    }
  }
  auto g_derivative = [&](int k, double lambda) {
    // e^{-lambda start} g^{(k)}(start)
    double v = 0.0;
    for (int j = 0; j <= k; ++j) {
      v += binom_int(k, j) * std::pow(lambda, k - j) * dP[j];
    }
    return v;
  };
  const double L = ctx.log_q();
  auto term = [&](std::size_t idx) -> Complex {
    const double n = static_cast<double>(idx + 1);
    const double lambda = std::log1p(-std::exp(n * L));
    const Complex w = std::exp(n * t * L - s * lambda) / n;
    // int_start^inf P(l) e^{lambda l} dl
    double integral = 0.0;
    double lam_pow = lambda;
    for (int k = 0; k < m; ++k) {
      integral -= ((k % 2 == 0) ? 1.0 : -1.0) * dP[k] / lam_pow;
      lam_pow *= lambda;
    }
    const double em = integral + 0.5 * dP[0] - g_derivative(1, lambda) / 12.0 +
                      g_derivative(3, lambda) / 720.0 -
                      g_derivative(5, lambda) / 30240.0;
    return w * std::exp(lambda * x0) * em;
  };
  // terms are negligible until q^n drops to about 1/start
  SeriesOptions options;
  options.min_terms = static_cast<std::size_t>(
      2.0 * std::log(static_cast<double>(start)) / -L + 10.0);
  return sum_series(term, ctx, options).value;
}

}  // namespace

SeriesValue log_Z(Complex s, Complex t, const QContext& ctx) {
  require_right_half(t, "log_Z");
  const double L = ctx.log_q();
  auto term = [&](std::size_t k) -> Complex {
    const double n = static_cast<double>(k + 1);
    return std::exp(n * t * L - s * std::log1p(-std::exp(n * L))) / n;
  };
  SeriesOptions options;
  options.tail_ratio = std::min(0.999, 1.01 * std::pow(ctx.q(), t.real()));
  if (s.real() < 0.0) {
    // terms grow until q^n = Re t / (Re t - Re s)
    const double tau = t.real();
    options.min_terms = static_cast<std::size_t>(
        std::log(tau / (tau - s.real())) / L + 2.0);
  }
  return sum_series(term, ctx, options);
}

ProductValue Z_product(Complex s, Complex t, long depth, const QContext& ctx) {
  require_right_half(t, "Z_product");
  if (depth < 0) throw DomainError("Z_product: depth must be >= 0");
  detail::CompensatedSum re;
  detail::CompensatedSum im;
  double abs_total = 0.0;
  Complex binom = 1.0;  // C(s+l-1, l)
  for (long l = 0; l <= depth; ++l) {
    const Complex term =
        -binom * log_one_minus_q_pow(t + static_cast<double>(l), ctx);
    re.add(term.real());
    im.add(term.imag());
    abs_total += std::abs(term);
    binom *= (s + static_cast<double>(l)) / static_cast<double>(l + 1);
  }
  ProductValue out;
  out.log_value = Complex(re.value(), im.value());
  out.value = std::exp(out.log_value);
  // binom now holds C(s+depth, depth+1)
  out.abs_err = std::abs(binom) *
                    std::pow(ctx.q(), t.real() + static_cast<double>(depth) + 1.0) /
                    (1.0 - ctx.q()) +
                4.0 * std::numeric_limits<double>::epsilon() * abs_total;
  out.depth = static_cast<std::size_t>(depth);
  return out;
}

long Z_product_depth(Complex s, Complex t, double tol, const QContext& ctx) {
  require_right_half(t, "Z_product_depth");
  const double q = ctx.q();
  Complex binom = 1.0;
  for (long L = 0; L < static_cast<long>(ctx.max_terms()); ++L) {
    binom *= (s + static_cast<double>(L)) / static_cast<double>(L + 1);
    const double next_ratio =
        std::abs(s + static_cast<double>(L + 1)) / static_cast<double>(L + 2) * q;
    const double bound = std::abs(binom) *
                         std::pow(q, t.real() + static_cast<double>(L) + 1.0) /
                         (1.0 - q);
    if (next_ratio < 1.0 && bound < tol) return L;
  }
  throw ConvergenceError("Z_product_depth: tail bound not reached");
}

ProductValue Z_product(Complex s, Complex t, const QContext& ctx) {
  return Z_product(s, t, Z_product_depth(s, t, ctx.eps_term(), ctx), ctx);
}

Complex Z_neg(int m, Complex t, const QContext& ctx) {
  if (m < 1) throw DomainError("Z_neg: m must be >= 1");
  require_right_half(t, "Z_neg");
  Complex log_value = 0.0;
  for (int l = 0; l <= m; ++l) {
    const double exponent = (l % 2 == 1 ? 1.0 : -1.0) * binom_int(m, l);
    log_value += exponent * log_one_minus_q_pow(t + static_cast<double>(l), ctx);
  }
  return std::exp(log_value);
}

Complex appell_O(Complex t, int m, long max_degree, const QContext& ctx) {
  if (m < 1) throw DomainError("appell_O: m must be >= 1");
  require_right_half(t, "appell_O");
  Complex log_value = 0.0;
  for (long d = 0; d <= max_degree; ++d) {
    log_value += binom_int(d + m - 1, m - 1) *
                 log_one_minus_q_pow(t + static_cast<double>(d), ctx);
  }
  return std::exp(log_value);
}

Complex appell_O(Complex t, int m, const QContext& ctx) {
  if (m < 1) throw DomainError("appell_O: m must be >= 1");
  require_right_half(t, "appell_O");
  const double q = ctx.q();
  for (long d = 0; d < static_cast<long>(ctx.max_terms()); ++d) {
    const double bound = binom_int(d + m, m - 1) *
                         std::pow(q, t.real() + static_cast<double>(d) + 1.0) /
                         (1.0 - q);
    const double ratio = static_cast<double>(d + m + 1) /
                         static_cast<double>(d + 2) * q;
    if (ratio < 1.0 && bound < ctx.eps_term()) {
      return appell_O(t, m, d, ctx);
    }
  }
  throw ConvergenceError("appell_O: tail bound not reached");
}

Complex appell_O_weighted(Complex t, const std::vector<int>& omega,
                          long max_degree, const QContext& ctx) {
  if (omega.empty()) throw DomainError("appell_O_weighted: empty weights");
  for (int w : omega) {
    if (w < 1) throw DomainError("appell_O_weighted: weights must be >= 1");
  }
  require_right_half(t, "appell_O_weighted");
  if (max_degree < 0) throw DomainError("appell_O_weighted: negative degree");
  // count[d] = #{l in N^r : sum l_i omega_i = d}
  std::vector<double> count(static_cast<std::size_t>(max_degree) + 1, 0.0);
  count[0] = 1.0;
  for (int w : omega) {
    for (long d = w; d <= max_degree; ++d) count[d] += count[d - w];
  }
  Complex log_value = 0.0;
  for (long d = 0; d <= max_degree; ++d) {
    if (count[d] == 0.0) continue;
    log_value += count[d] * log_one_minus_q_pow(t + static_cast<double>(d), ctx);
  }
  return std::exp(log_value);
}

SeriesValue zeta_from_Z(int nu, Complex s, const QContext& ctx) {
  if (nu < 1) throw DomainError("zeta_from_Z: nu must be >= 1");
  const Complex t = s - static_cast<double>(nu);
  if (!(t.real() > 0.0)) {
    throw DomainError("zeta_from_Z: requires Re(s - nu) > 0");
  }
  const double L = ctx.log_q();
  auto term = [&](std::size_t k) -> Complex {
    const double n = static_cast<double>(k + 1);
    return std::exp(n * t * L - s * std::log1p(-std::exp(n * L)));
  };
  SeriesOptions options;
  options.tail_ratio = std::min(0.999, 1.01 * std::pow(ctx.q(), t.real()));
  SeriesValue sum = sum_series(term, ctx, options);
  const Complex pref = std::exp(s * std::log1p(-ctx.q()));
  sum.value *= pref;
  sum.abs_err *= std::abs(pref);
  return sum;
}

std::vector<EvalReport> verify_ladders(Complex s, Complex t, int m,
                                       const QContext& ctx, double tol) {
  if (m < 1) throw DomainError("verify_ladders: m must be >= 1");
  require_right_half(t, "verify_ladders");
  auto lz = [&](Complex a, Complex b) { return log_Z(a, b, ctx).value; };
  const std::vector<std::pair<std::string, Complex>> inputs{
      {"s", s}, {"t", t}, {"m", Complex(m)}, {"q", Complex(ctx.q())}};
  std::vector<EvalReport> out;

  {
    auto term = [&](std::size_t l) -> Complex {
      return binom_int(m + static_cast<long>(l) - 1, static_cast<long>(l)) *
             lz(s, t + static_cast<double>(l));
    };
    const Complex rhs = sum_series(term, ctx).value;
    out.push_back(make_report("ladder Z(s+m,t)", inputs,
                              lz(s + static_cast<double>(m), t), rhs, tol, tol));
  }
  {
    Complex rhs = 0.0;
    for (int l = 0; l <= m; ++l) {
      rhs += (l % 2 == 0 ? 1.0 : -1.0) * binom_int(m, l) *
             lz(s, t + static_cast<double>(l));
    }
    out.push_back(make_report("ladder Z(s-m,t)", inputs,
                              lz(s - static_cast<double>(m), t), rhs, tol, tol));
  }
  {
    Complex rhs = 0.0;
    for (int l = 0; l <= m; ++l) {
      rhs += (l % 2 == 0 ? 1.0 : -1.0) * binom_int(m, l) *
             lz(s - static_cast<double>(l), t);
    }
    out.push_back(make_report("ladder Z(s,t+m)", inputs,
                              lz(s, t + static_cast<double>(m)), rhs, tol, tol));
  }
  if (t.real() > m) {
    constexpr long kHead = 64;
    Complex rhs = 0.0;
    for (long l = 0; l < kHead; ++l) {
      rhs += binom_int(m + l - 1, l) * lz(s - static_cast<double>(l), t);
    }
    rhs += ladder_down_tail(s, t, m, kHead, ctx);
    out.push_back(make_report("ladder Z(s,t-m)", inputs,
                              lz(s, t - static_cast<double>(m)), rhs, tol, tol));
  }
  out.push_back(make_report("ladder Z(s,t)=Z(s-1,t)Z(s,t+1)", inputs, lz(s, t),
                            lz(s - 1.0, t) + lz(s, t + 1.0), tol, tol));
  return out;
}

EvalReport verify_zeta_recurrences(int nu, int m, Complex s,
                                   const QContext& ctx, double tol) {
  if (m < 1 || m > nu - 1) {
    throw DomainError("verify_zeta_recurrences: requires 1 <= m <= nu-1");
  }
  const Complex lhs = zeta_from_Z(nu - m, s, ctx).value;
  Complex rhs = 0.0;
  for (int l = 0; l <= m; ++l) {
    rhs += (l % 2 == 0 ? 1.0 : -1.0) * binom_int(m, l) *
           std::pow(1.0 - ctx.q(), l) *
           zeta_from_Z(nu - l, s - static_cast<double>(l), ctx).value;
  }
  return make_report("zeta recurrence in nu", {{"nu", Complex(nu)},
                                               {"m", Complex(m)},
                                               {"s", s},
                                               {"q", Complex(ctx.q())}},
                     lhs, rhs, tol);
}

EvalReport verify_zeta_recurrence_z(int nu, Complex s, Complex z,
                                    const QContext& ctx, double tol) {
  if (nu < 2) throw DomainError("verify_zeta_recurrence_z: nu must be >= 2");
  auto direct = [&](int n, Complex a) {
    return zeta_nu_direct(ZetaQuery{n, a, z, ZetaMethod::direct}, ctx).value;
  };
  const Complex lhs = direct(nu, s);
  const Complex rhs = direct(nu - 1, s) + (1.0 - ctx.q()) * direct(nu - 1, s - 1.0);
  return make_report("zeta recurrence in nu at z",
                     {{"nu", Complex(nu)}, {"s", s}, {"z", z}, {"q", Complex(ctx.q())}},
                     lhs, rhs, tol);
}

}  // namespace qhz
