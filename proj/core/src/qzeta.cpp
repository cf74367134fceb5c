#include "qhz/qzeta.hpp"

#include <cmath>

#include "qhz/classical.hpp"
#include "qhz/genfun.hpp"
#include "qhz/qbernoulli.hpp"
#include "qhz/quadrature.hpp"
#include "quad.hpp"

namespace qhz {

namespace {

constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

void require_nu(int nu) {
  if (nu < 1) throw DomainError("nu must be a positive integer");
}

void require_pole_free(int nu, Complex s, Complex z, const QContext& ctx) {
  if (auto pole = pole_near(nu, s, z, ctx)) {
    throw NearPoleError("s lies within pole_guard of the pole at n = " +
                            std::to_string(pole->n) +
                            ", m = " + std::to_string(pole->m),
                        *pole);
  }
}

// int_a^T t^{s-nu-1} F_nu^+(t,z) dt with T chosen from the majorant so the
// omitted tail is below tail_tol.
QuadratureResult upper_integral(int nu, Complex s, Complex z, double a,
                                double tail_tol, const QContext& ctx) {
  const double sigma = s.real() - nu - 1.0;
  auto majorant = [&](double t) {
    return std::pow(t, sigma) * bound_F_plus(GenfunPoint{nu, t, z}, ctx);
  };
  const double beta = std::cos(z.imag() * ctx.log_q());
  const double rate =
      (beta * std::exp(-z.real() * ctx.log_q()) - 1.0) / (1.0 - ctx.q());
  double T = std::max(2.0 * a, a + 1.0);
  for (int i = 0; i < 200; ++i) {
    if (T > 1e6) break;
    if (2.0 * majorant(T) * std::max(T, 1.0 / rate) < tail_tol) break;
    T *= 1.25;
  }
  auto f = [&](double t) -> Complex {
    return std::exp((s - static_cast<double>(nu) - 1.0) * std::log(t)) *
           F_plus(GenfunPoint{nu, t, z}, ctx).value;
  };
  QuadratureResult r = integrate(f, a, T, tail_tol, 1e-14);
  r.abs_err += tail_tol;
  return r;
}

// phi with Re(alpha) >= 1: a^alpha int_0^inf e^{-y alpha} e^{c a e^{-y}} dy
Complex phi_convergent(Complex alpha, double a, double c) {
  const double y_max = (42.0 + std::log1p(std::abs(alpha))) / alpha.real();
  auto f = [&](double y) -> Complex {
    return std::exp(-y * alpha + c * a * std::exp(-y));
  };
  const QuadratureResult r = integrate(f, 0.0, y_max, 0.0, 1e-14, 20000);
  return std::exp(alpha * std::log(a)) * r.value;
}

}  // namespace

std::string to_string(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::direct:
      return "direct";
    case ZetaMethod::binomial:
      return "binomial";
    case ZetaMethod::mellin:
      return "mellin";
    case ZetaMethod::integral_rep:
      return "integral-rep";
  }
  return "unknown";
}

std::optional<ZetaMethod> parse_zeta_method(const std::string& name) {
  if (name == "direct") return ZetaMethod::direct;
  if (name == "binomial") return ZetaMethod::binomial;
  if (name == "mellin") return ZetaMethod::mellin;
  if (name == "integral-rep" || name == "integral_rep") {
    return ZetaMethod::integral_rep;
  }
  return std::nullopt;
}

SeriesValue zeta_q_general(Complex s, Complex t, Complex z,
                           const QContext& ctx) {
  if (!(t.real() > 0.0)) {
    throw DomainError("zeta_q_general: requires Re t > 0");
  }
  if (!(z.real() > 0.0)) {
    throw DomainError("zeta_q_general: requires Re z > 0");
  }
  const double L = ctx.log_q();
  const double log_one_minus_q = std::log1p(-ctx.q());
  auto term = [&](std::size_t n) -> Complex {
    const Complex w = static_cast<double>(n) + z;
    const Complex log_bracket = std::log(-qhz::expm1(w * L)) - log_one_minus_q;
    return std::exp(w * t * L - s * log_bracket);
  };
  SeriesOptions options;
  options.tail_ratio = std::min(0.999, 1.01 * std::pow(ctx.q(), t.real()));
  return sum_series(term, ctx, options);
}

SeriesValue zeta_nu_direct(const ZetaQuery& query, const QContext& ctx) {
  require_nu(query.nu);
  if (!(query.s.real() > query.nu)) {
    throw DomainError("zeta_nu_direct: requires Re s > nu");
  }
  return zeta_q_general(query.s, query.s - static_cast<double>(query.nu),
                        query.z, ctx);
}

SeriesValue zeta_nu_binomial(const ZetaQuery& query, const QContext& ctx,
                             PoleCheck check) {
  using detail::Quad;
  using detail::QuadComplex;
  require_nu(query.nu);
  const int nu = query.nu;
  const Complex s = query.s;
  const Complex z = query.z;
  if (!(z.real() > 0.0)) {
    throw DomainError("zeta_nu_binomial: requires Re z > 0");
  }
  if (check == PoleCheck::enforce) require_pole_free(nu, s, z, ctx);

  const detail::QuadQ qq(ctx);
  const QuadComplex sq = detail::to_quad(s);
  const QuadComplex zq = detail::to_quad(z);
  const QuadComplex q_z = qq.pow(zq);
  const Quad q_quad = qq.q;

  const double rho = std::pow(ctx.q(), z.real());
  const double min_l = std::max(
      {static_cast<double>(nu) - s.real() + 3.0,
       std::abs(s) * rho / (1.0 - rho) + 3.0, 3.0});
  // the tail after the stopping point is at most |term| r / (1-r)
  const double tail_factor = rho / (1.0 - rho);
  const double eps = ctx.eps_term();

  QuadComplex u = sq - Quad(nu);
  QuadComplex binom(1);  // C(s+l-1, l)
  QuadComplex q_zu = qq.pow(zq * u);
  QuadComplex q_u = qq.pow(u);
  QuadComplex sum(0);
  Quad abs_total = 0;
  int small_run = 0;
  double last = 0.0;
  for (std::size_t l = 0; l < ctx.max_terms(); ++l) {
    QuadComplex term;
    const Complex u_d = detail::to_double(u);
    if (static_cast<int>(l) >= nu && std::abs(u_d) < 0.5) {
      // C(s+l-1,l)/u with the vanishing factor (s + l - nu) = u removed
      QuadComplex c_over_u(1);
      for (std::size_t i = 0; i < l; ++i) {
        if (i + nu == l) continue;
        c_over_u *= sq + Quad(static_cast<long>(i));
      }
      for (std::size_t i = 2; i <= l; ++i) c_over_u /= Quad(static_cast<long>(i));
      QuadComplex u_over_den;
      if (u_d == Complex(0.0)) {
        u_over_den = QuadComplex(-Quad(1) / qq.log_q);
      } else {
        u_over_den = u / qq.one_minus_pow(u);
      }
      term = c_over_u * u_over_den * q_zu;
    } else {
      const QuadComplex den = detail::quad_abs(q_u) < Quad(0.5)
                                  ? QuadComplex(1) - q_u
                                  : qq.one_minus_pow(u);
      term = binom * q_zu / den;
    }
    sum += term;
    const Quad mag = detail::quad_abs(term);
    abs_total += mag;
    last = static_cast<double>(mag);
    const double partial = static_cast<double>(detail::quad_abs(sum));
    if (last * (1.0 + tail_factor) < eps * partial || last == 0.0) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run >= 3 && static_cast<double>(l) + 1.0 >= min_l) {
      const QuadComplex pref = boost::multiprecision::exp(
          sq * boost::multiprecision::log(qq.one_minus_q));
      const QuadComplex value = pref * sum;
      const double abs_pref = static_cast<double>(detail::quad_abs(pref));
      SeriesValue out;
      out.value = detail::to_double(value);
      out.abs_err =
          abs_pref * (3.0 * last * (1.0 + tail_factor) +
                      1e-32 * static_cast<double>(abs_total)) +
          2.0 * kMachineEps * std::abs(out.value);
      out.terms_used = l + 1;
      if (!is_finite(out.value)) {
        throw RangeError("zeta_nu_binomial: value overflows double");
      }
      return out;
    }
    binom = binom * (sq + Quad(static_cast<long>(l))) /
            Quad(static_cast<long>(l + 1));
    u += Quad(1);
    q_zu *= q_z;
    q_u *= q_quad;
  }
  throw ConvergenceError("zeta_nu_binomial: no convergence within " +
                         std::to_string(ctx.max_terms()) + " terms");
}

SeriesValue zeta_nu_mellin(const ZetaQuery& query, double a_split,
                           const QContext& ctx) {
  require_nu(query.nu);
  const int nu = query.nu;
  const Complex s = query.s;
  const Complex z = query.z;
  if (!(s.real() > nu + 1.0)) {
    throw DomainError("zeta_nu_mellin: requires Re s > nu + 1");
  }
  if (!in_domain_Jq(z, ctx)) {
    throw DomainError("zeta_nu_mellin: z must lie in J_q");
  }
  if (!(a_split > 0.0)) {
    throw DomainError("zeta_nu_mellin: a_split must be positive");
  }
  // F_nu^+ stays bounded as t -> 0, so in x = log t the integrand decays
  // like e^{x (Re s - nu)}
  const double log_a = std::log(a_split);
  const double x_min = log_a - 42.0 / (s.real() - nu);
  const Complex shift = s - static_cast<double>(nu);
  auto lower = [&](double x) -> Complex {
    return std::exp(x * shift) *
           F_plus(GenfunPoint{nu, std::exp(x), z}, ctx).value;
  };
  const QuadratureResult low = integrate(lower, x_min, log_a, 0.0, 1e-14);
  const double scale = std::max(std::abs(low.value), 1e-300);
  const QuadratureResult high =
      upper_integral(nu, s, z, a_split, 1e-16 * scale, ctx);

  const Complex rg = rgamma(s);
  SeriesValue out;
  out.value = rg * (low.value + high.value);
  out.abs_err = std::abs(rg) * (low.abs_err + high.abs_err +
                                1e-15 * std::abs(low.value + high.value)) +
                4.0 * kMachineEps * std::abs(out.value);
  out.terms_used = low.evaluations + high.evaluations;
  return out;
}

Complex phi(int nu, long m, Complex s, double a, const QContext& ctx) {
  require_nu(nu);
  if (!(a > 0.0)) throw DomainError("phi: a must be positive");
  const Complex alpha =
      s - static_cast<double>(nu) - static_cast<double>(m) * ctx.delta();
  const double guard = ctx.pole_guard();
  const long k = std::lround(-alpha.real());
  if (k >= 0 && std::abs(alpha.real() + k) < guard &&
      std::abs(alpha.imag()) < guard) {
    PoleDescriptor pole;
    pole.n = nu - static_cast<int>(k);
    pole.m = m;
    pole.location = static_cast<double>(pole.n) +
                    static_cast<double>(m) * ctx.delta();
    pole.residue = 1.0 / (factorial(k) * std::pow(1.0 - ctx.q(), k));
    throw NearPoleError("phi: s lies within pole_guard of a pole", pole);
  }
  const double c = 1.0 / (1.0 - ctx.q());
  const int shifts =
      alpha.real() >= 1.0 ? 0 : static_cast<int>(std::ceil(1.0 - alpha.real()));
  const Complex log_a = std::log(a);
  const double e_ca = std::exp(c * a);
  // phi(alpha) = sum_{j=1}^{J} (-c)^{j-1} a^{alpha+j-1} e^{ca} / (alpha)_j
  //              + (-c)^J / (alpha)_J phi(alpha + J)
  Complex boundary = 0.0;
  Complex pochhammer = 1.0;
  double neg_c_pow = 1.0;
  for (int j = 1; j <= shifts; ++j) {
    pochhammer *= alpha + static_cast<double>(j - 1);
    boundary += neg_c_pow *
                std::exp((alpha + static_cast<double>(j - 1)) * log_a) * e_ca /
                pochhammer;
    neg_c_pow *= -c;
  }
  const Complex shifted = phi_convergent(alpha + static_cast<double>(shifts), a, c);
  return boundary + neg_c_pow / pochhammer * shifted;
}

int integral_rep_order(Complex s) {
  return std::max(1, static_cast<int>(std::floor(1.0 - s.real())) + 1);
}

SeriesValue zeta_nu_integral_rep(const ZetaQuery& query, int N,
                                 const QContext& ctx) {
  require_nu(query.nu);
  const int nu = query.nu;
  const Complex s = query.s;
  const Complex z = query.z;
  if (!in_domain_Jq(z, ctx)) {
    throw DomainError("zeta_nu_integral_rep: z must lie in J_q");
  }
  if (N < 1) throw DomainError("zeta_nu_integral_rep: N must be >= 1");
  if (!(s.real() > 1.0 - N)) {
    throw DomainError("zeta_nu_integral_rep: requires Re s > 1 - N");
  }
  require_pole_free(nu, s, z, ctx);

  const int head = N + nu - 1;
  const std::vector<Complex> btilde = btilde_sequence(nu, head, z, ctx);
  std::vector<Complex> head_coeff(btilde.size());
  for (int k = 0; k <= head; ++k) {
    head_coeff[k] = ((k % 2 == 0) ? 1.0 : -1.0) * btilde[k] / factorial(k);
  }

  // s = -j exactly: 1/Gamma vanishes and the k = nu + j head term has its
  // pole; the product is the finite limit
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    const int j = static_cast<int>(-s.real());
    SeriesValue out;
    out.value = ((j % 2 == 0) ? 1.0 : -1.0) * factorial(j) * head_coeff[nu + j];
    out.abs_err = 1e-14 * std::abs(out.value);
    out.terms_used = static_cast<std::size_t>(head + 1);
    return out;
  }

  const double c = 1.0 / (1.0 - ctx.q());
  const int k_max = std::max(head + 10, static_cast<int>(std::ceil(3.0 * c)) + 40);
  const std::vector<Complex> taylor = gq_taylor_coefficients(nu, k_max, z, ctx);
  auto remainder = [&](double t) {
    Complex r = 0.0;
    for (int k = k_max; k > head; --k) r = r * t + taylor[k];
    return r * std::pow(t, head + 1);
  };

  const Complex shift = s - static_cast<double>(nu);
  const double decay = s.real() + N;  // remainder integrand ~ t^{Re s + N - 1}
  auto lower = [&](double x) -> Complex {
    return std::exp(x * shift) * remainder(std::exp(x));
  };
  const QuadratureResult I1 =
      integrate(lower, -45.0 / decay, 0.0, 0.0, 1e-14);

  Complex pole_part = 0.0;
  for (int k = 0; k <= head; ++k) {
    pole_part += head_coeff[k] / (shift + static_cast<double>(k));
  }

  const double scale =
      std::max({std::abs(I1.value), std::abs(pole_part), 1e-300});
  const QuadratureResult I2 = upper_integral(nu, s, z, 1.0, 1e-17 * scale, ctx);

  // Fourier correction: sum over m != 0 until the bound on the rest is
  // negligible
  const double L = ctx.log_q();
  const Complex delta = ctx.delta();
  const double abs_im_delta = std::abs(delta.imag());
  const double log_one_minus_q = std::log1p(-ctx.q());
  const Complex pref = -std::pow(1.0 - ctx.q(), nu) / L;
  const double e_c = std::exp(c);
  auto mode_bound = [&](long m) {
    const double y = static_cast<double>(m) * abs_im_delta;
    return std::abs(pref) *
           std::exp(log_abs_gamma_imag(nu, y) +
                    2.0 * kPi * static_cast<double>(m) * std::abs(z.imag())) *
           e_c / y;
  };
  Complex fourier = 0.0;
  double fourier_abs = 0.0;
  long m = 1;
  for (;; ++m) {
    for (long sign : {1L, -1L}) {
      const long mm = sign * m;
      const Complex md = static_cast<double>(mm) * delta;
      const Complex term =
          std::exp(md * log_one_minus_q + log_gamma(static_cast<double>(nu) + md) +
                   2.0 * kPi * kI * static_cast<double>(mm) * z) *
          phi(nu, mm, s, 1.0, ctx);
      fourier += pref * term;
      fourier_abs += std::abs(pref * term);
    }
    // the bound decays at least geometrically; twice the next bound covers
    // the rest
    if (4.0 * mode_bound(m + 1) < 1e-17 * scale || m > 10000) break;
  }
  const double fourier_tail = 4.0 * mode_bound(m + 1);

  const Complex bracket = I1.value + pole_part + I2.value + fourier;
  const Complex rg = rgamma(s);
  SeriesValue out;
  out.value = rg * bracket;
  out.abs_err = std::abs(rg) *
                    (I1.abs_err + I2.abs_err + fourier_tail +
                     1e-13 * fourier_abs +
                     8.0 * kMachineEps * (std::abs(pole_part) + scale)) +
                4.0 * kMachineEps * std::abs(out.value);
  out.terms_used = I1.evaluations + I2.evaluations + static_cast<std::size_t>(m);
  return out;
}

SeriesValue zeta_nu(const ZetaQuery& query, const QContext& ctx) {
  switch (query.method) {
    case ZetaMethod::direct:
      return zeta_nu_direct(query, ctx);
    case ZetaMethod::binomial:
      return zeta_nu_binomial(query, ctx);
    case ZetaMethod::mellin:
      return zeta_nu_mellin(query, 1.0, ctx);
    case ZetaMethod::integral_rep:
      return zeta_nu_integral_rep(query, integral_rep_order(query.s), ctx);
  }
  throw DomainError("zeta_nu: unknown method");
}

bool is_pole_index(int nu, int n, long m) {
  return n <= nu && (n >= 1 || m != 0);
}

Complex pole_residue(int nu, int n, long m, Complex z, const QContext& ctx) {
  require_nu(nu);
  if (!is_pole_index(nu, n, m)) {
    throw DomainError("pole_residue: (n, m) is not a pole");
  }
  const Complex md = static_cast<double>(m) * ctx.delta();
  Complex binom = 1.0;
  for (int i = 0; i < nu - n; ++i) {
    binom *= (static_cast<double>(nu - 1 - i) + md) / static_cast<double>(i + 1);
  }
  const Complex power =
      std::exp((static_cast<double>(n) + md) * std::log1p(-ctx.q()));
  const Complex phase = std::exp(2.0 * kPi * kI * static_cast<double>(m) * z);
  return -binom * power / ctx.log_q() * phase;
}

std::vector<PoleDescriptor> poles(int nu, int n_lo, int n_hi, long m_lo,
                                  long m_hi, Complex z, const QContext& ctx) {
  require_nu(nu);
  std::vector<PoleDescriptor> out;
  for (int n = n_lo; n <= std::min(n_hi, nu); ++n) {
    for (long m = m_lo; m <= m_hi; ++m) {
      if (!is_pole_index(nu, n, m)) continue;
      PoleDescriptor p;
      p.n = n;
      p.m = m;
      p.location = static_cast<double>(n) + static_cast<double>(m) * ctx.delta();
      p.residue = pole_residue(nu, n, m, z, ctx);
      out.push_back(p);
    }
  }
  return out;
}

std::optional<PoleDescriptor> pole_near(int nu, Complex s, Complex z,
                                        const QContext& ctx) {
  const double im_delta = ctx.delta().imag();
  const long n = std::lround(s.real());
  const long m = std::lround(s.imag() / im_delta);
  const double guard = ctx.pole_guard();
  if (std::abs(s.real() - static_cast<double>(n)) >= guard) return std::nullopt;
  if (std::abs(s.imag() - static_cast<double>(m) * im_delta) >= guard) {
    return std::nullopt;
  }
  if (n > nu || n < std::numeric_limits<int>::min() / 2 ||
      !is_pole_index(nu, static_cast<int>(n), m)) {
    return std::nullopt;
  }
  PoleDescriptor p;
  p.n = static_cast<int>(n);
  p.m = m;
  p.location = static_cast<double>(n) + static_cast<double>(m) * ctx.delta();
  p.residue = pole_residue(nu, p.n, m, z, ctx);
  return p;
}

Complex special_value(int nu, int m, Complex z, const QContext& ctx) {
  if (m < 1) {
    throw DomainError("special_value: m must be >= 1 (s = 1 is a pole)");
  }
  return -b_value(nu, m, z, ctx) / static_cast<double>(m);
}

Complex residue_numeric(int nu, int n, long m, Complex z, const QContext& ctx) {
  require_nu(nu);
  if (!is_pole_index(nu, n, m)) {
    throw DomainError("residue_numeric: (n, m) is not a pole");
  }
  const Complex s0 = static_cast<double>(n) + static_cast<double>(m) * ctx.delta();
  auto probe = [&](double h) {
    const ZetaQuery query{nu, s0 + h, z, ZetaMethod::binomial};
    return h * zeta_nu_binomial(query, ctx, PoleCheck::skip).value;
  };
  const double h = 1e-2;
  const Complex f1 = probe(h);
  const Complex f2 = probe(h / 2.0);
  const Complex f4 = probe(h / 4.0);
  const Complex r = (8.0 * f4 - 6.0 * f2 + f1) / 3.0;
  if (!is_finite(r)) {
    throw ConvergenceError("residue_numeric: extrapolation is not finite");
  }
  return r;
}

std::vector<LimitRow> classical_limit_sweep(int nu, Complex s, Complex z,
                                            int k_max) {
  require_nu(nu);
  if (k_max < 1 || k_max > 40) {
    throw DomainError("classical_limit_sweep: k_max must be in 1..40");
  }
  if (s.imag() == 0.0 && s.real() >= 1.0 && s.real() <= nu &&
      s.real() == std::floor(s.real())) {
    throw DomainError("classical_limit_sweep: s must avoid 1..nu");
  }
  if (!(z.real() > 0.0)) {
    throw DomainError("classical_limit_sweep: requires Re z > 0");
  }
  const Complex classical = hurwitz_zeta(s, z).value;
  std::vector<LimitRow> rows;
  for (int k = std::min(3, k_max); k <= k_max; ++k) {
    const QContext ctx(1.0 - std::ldexp(1.0, -k), QContext::kDefaultEpsTerm,
                       std::size_t{4000000});
    LimitRow row;
    row.k = k;
    row.q = ctx.q();
    row.q_value = zeta_nu_binomial(ZetaQuery{nu, s, z, ZetaMethod::binomial}, ctx)
                      .value;
    row.classical_value = classical;
    row.abs_error = std::abs(row.q_value - classical);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> classical_limit_check(int nu, Complex s, Complex z,
                                          int k_max) {
  std::vector<double> out;
  for (const auto& row : classical_limit_sweep(nu, s, z, k_max)) {
    out.push_back(row.abs_error);
  }
  return out;
}

}  // namespace qhz
