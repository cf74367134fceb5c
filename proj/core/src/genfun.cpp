#include "qhz/genfun.hpp"

namespace qhz {

namespace {

constexpr double kUnderflowExponent = -745.0;

void require_nu(int nu) {
  if (nu < 1) throw DomainError("genfun: nu must be a positive integer");
}

Complex int_power(Complex t, int nu) {
  Complex r = 1.0;
  for (int k = 0; k < nu; ++k) r *= t;
  return r;
}

// log |(1-q)^nu / log q| + Re(t)/(1-q): size of the prefactor of the
// Fourier form.
double log_fourier_prefactor(const GenfunPoint& p, const QContext& ctx) {
  const double one_minus_q = 1.0 - ctx.q();
  return p.nu * std::log(one_minus_q) - std::log(std::abs(ctx.log_q())) +
         p.t.real() / one_minus_q;
}

}  // namespace

SeriesValue F_plus(const GenfunPoint& p, const QContext& ctx) {
  require_nu(p.nu);
  if (!in_domain_Dq(p.z, ctx)) {
    throw DomainError("F_plus: z must lie in D_q");
  }
  if (!in_sector_Rq(p.t, p.z, ctx)) {
    throw DomainError("F_plus: t lies outside the sector R_q(z)");
  }
  const double L = ctx.log_q();
  const double one_minus_q = 1.0 - ctx.q();
  const double nu = p.nu;

  // terms grow until |t| cos(theta) q^{-(n+x)} reaches about nu, then fall
  // off doubly exponentially
  const double cos_theta =
      std::cos(arg_half_open(p.t) - p.z.imag() * L);
  const double peak =
      std::log((nu + 2.0) / (std::abs(p.t) * cos_theta)) / (-L) - p.z.real();
  SeriesOptions options;
  options.min_terms =
      static_cast<std::size_t>(std::max(0.0, std::ceil(peak))) + 3;
  options.floor = 1e-300;

  bool underflowed = false;
  auto term = [&](std::size_t n) -> Complex {
    if (underflowed) return 0.0;
    const Complex w = static_cast<double>(n) + p.z;
    const Complex q_neg = std::exp(-w * L);  // q^{-(n+z)}
    const Complex exponent = -nu * w * L + p.t * (1.0 - q_neg) / one_minus_q;
    if (exponent.real() < kUnderflowExponent) {
      if (static_cast<double>(n) > peak) underflowed = true;
      return 0.0;
    }
    return std::exp(exponent);
  };
  SeriesValue inner = sum_series(term, ctx, options);
  const Complex scale = int_power(p.t, p.nu);
  inner.value *= scale;
  inner.abs_err *= std::abs(scale);
  return inner;
}

SeriesValue F_minus(const GenfunPoint& p, const QContext& ctx) {
  require_nu(p.nu);
  if (p.t == Complex(0.0)) {
    return SeriesValue{Complex(0.0), 0.0, 0};
  }
  const double L = ctx.log_q();
  const double one_minus_q = 1.0 - ctx.q();
  const double nu = p.nu;
  auto term = [&](std::size_t k) -> Complex {
    const Complex w = static_cast<double>(k + 1) - p.z;  // n - z
    const Complex exponent =
        nu * w * L + p.t * (-qhz::expm1(w * L)) / one_minus_q;
    return std::exp(exponent);
  };
  SeriesOptions options;
  options.tail_ratio = std::min(0.999, 1.1 * std::pow(ctx.q(), nu));
  SeriesValue inner = sum_series(term, ctx, options);
  const Complex scale = int_power(p.t, p.nu);
  inner.value *= scale;
  inner.abs_err *= std::abs(scale);
  return inner;
}

SeriesValue F_bilateral(const GenfunPoint& p, const QContext& ctx) {
  const SeriesValue plus = F_plus(p, ctx);
  const SeriesValue minus = F_minus(p, ctx);
  return SeriesValue{plus.value + minus.value,
                     plus.abs_err + minus.abs_err +
                         std::numeric_limits<double>::epsilon() *
                             std::abs(plus.value + minus.value),
                     plus.terms_used + minus.terms_used};
}

double fourier_tail_bound(const GenfunPoint& p, int max_mode,
                          const QContext& ctx) {
  const double abs_L = std::abs(ctx.log_q());
  const double theta = std::abs(arg_half_open(p.t) - p.z.imag() * ctx.log_q());
  const double log_pref = log_fourier_prefactor(p, ctx);
  double tail = 0.0;
  for (long m = max_mode + 1;; ++m) {
    const double y = 2.0 * kPi * static_cast<double>(m) / abs_L;
    // both signs of m, each bounded by the larger of the two phases
    const double log_term = log_pref + log_abs_gamma_imag(p.nu, y) +
                            2.0 * kPi * static_cast<double>(m) * theta / abs_L;
    const double term = 2.0 * std::exp(log_term);
    tail += term;
    if (term <= 1e-18 * tail || term < 1e-300 ||
        m > max_mode + 100000) {
      break;
    }
  }
  return tail;
}

int fourier_modes_needed(const GenfunPoint& p, double tol,
                         const QContext& ctx) {
  const double zero_mode =
      std::exp(log_fourier_prefactor(p, ctx)) * factorial(p.nu - 1);
  for (int m = 0; m < 10000; ++m) {
    if (fourier_tail_bound(p, m, ctx) < tol * zero_mode) return m;
  }
  throw ConvergenceError("fourier_modes_needed: tail does not decay");
}

SeriesValue F_fourier(const GenfunPoint& p, int max_mode,
                      const QContext& ctx) {
  require_nu(p.nu);
  if (max_mode < 0) throw DomainError("F_fourier: max_mode must be >= 0");
  if (!in_domain_Dq(p.z, ctx)) {
    throw DomainError("F_fourier: z must lie in D_q");
  }
  if (!in_sector_Rq(p.t, p.z, ctx)) {
    throw DomainError("F_fourier: t lies outside the sector R_q(z)");
  }
  const double L = ctx.log_q();
  const double one_minus_q = 1.0 - ctx.q();
  const Complex delta = ctx.delta();
  const Complex log_t(std::log(std::abs(p.t)), arg_half_open(p.t));
  const Complex log_ratio = std::log(one_minus_q) - log_t;  // log((1-q)/t)
  const bool real_case = p.t.imag() == 0.0 && p.z.imag() == 0.0;

  auto mode = [&](long m) -> Complex {
    const Complex md = static_cast<double>(m) * delta;
    return std::exp(md * log_ratio + log_gamma(static_cast<double>(p.nu) + md) +
                    2.0 * kPi * kI * static_cast<double>(m) * p.z);
  };

  detail::CompensatedSum re;
  detail::CompensatedSum im;
  const double gamma_nu = factorial(p.nu - 1);
  re.add(gamma_nu);
  double abs_total = gamma_nu;
  for (long m = 1; m <= max_mode; ++m) {
    const Complex plus = mode(m);
    Complex pair;
    if (real_case) {
      // the -m mode is the conjugate of the +m mode
      pair = Complex(2.0 * plus.real(), 0.0);
    } else {
      pair = plus + mode(-m);
    }
    re.add(pair.real());
    im.add(pair.imag());
    abs_total += std::abs(pair);
  }
  const Complex prefactor = -std::pow(one_minus_q, p.nu) / L *
                            std::exp(p.t / one_minus_q);
  SeriesValue out;
  out.value = prefactor * Complex(re.value(), im.value());
  out.abs_err = fourier_tail_bound(p, max_mode, ctx) +
                8.0 * std::numeric_limits<double>::epsilon() *
                    std::abs(prefactor) * abs_total;
  out.terms_used = static_cast<std::size_t>(2 * max_mode + 1);
  return out;
}

SeriesValue F_fourier(const GenfunPoint& p, const QContext& ctx, double tol) {
  return F_fourier(p, fourier_modes_needed(p, tol, ctx), ctx);
}

double bound_F_plus(const GenfunPoint& p, const QContext& ctx) {
  require_nu(p.nu);
  if (p.t.imag() != 0.0 || !(p.t.real() > 0.0)) {
    throw DomainError("bound_F_plus: t must be real and positive");
  }
  if (!in_domain_Jq(p.z, ctx)) {
    throw DomainError("bound_F_plus: z must lie in J_q");
  }
  const double t = p.t.real();
  const double x = p.z.real();
  const double L = ctx.log_q();
  const double beta = std::cos(p.z.imag() * L);
  const double q_neg_x = std::exp(-x * L);
  const double nu = p.nu;
  const double decay = std::exp(-t * (beta * q_neg_x - 1.0) / (1.0 - ctx.q()));
  const double head = std::pow(t, nu) * std::exp(-nu * x * L);
  const double tail = std::pow(nu * std::exp(-1.0) / beta, nu) /
                      (-std::expm1(-t * beta * q_neg_x));
  return decay * (head + tail);
}

SeriesValue G_q(const GenfunPoint& p, const QContext& ctx) {
  require_nu(p.nu);
  const double one_minus_q = 1.0 - ctx.q();
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  // Near q = 1 the closed form cancels e^{t/(1-q)} against F_minus. Inside
  // the sector, G_q equals F_plus minus the non-constant Fourier modes,
  // which are exponentially small there.
  if (p.t.real() / one_minus_q > 25.0 && in_domain_Dq(p.z, ctx) &&
      in_sector_Rq(p.t, p.z, ctx)) {
    const SeriesValue plus = F_plus(p, ctx);
    const double floor = std::max(std::abs(plus.value), 1e-300);
    int modes = 0;
    while (fourier_tail_bound(p, modes, ctx) >= kEps * floor) {
      if (++modes > 10000) {
        throw ConvergenceError("G_q: Fourier modes do not decay");
      }
    }
    const double L = ctx.log_q();
    const Complex log_t(std::log(std::abs(p.t)), arg_half_open(p.t));
    const Complex log_ratio = std::log(one_minus_q) - log_t;
    const Complex log_pref = p.nu * std::log(one_minus_q) - std::log(-L) +
                             p.t / one_minus_q;
    Complex modes_sum = 0.0;
    double abs_total = 0.0;
    for (long m = -modes; m <= modes; ++m) {
      if (m == 0) continue;
      const Complex md = static_cast<double>(m) * ctx.delta();
      const Complex term =
          std::exp(log_pref + md * log_ratio +
                   log_gamma(static_cast<double>(p.nu) + md) +
                   2.0 * kPi * kI * static_cast<double>(m) * p.z);
      modes_sum += term;
      abs_total += std::abs(term);
    }
    return SeriesValue{plus.value - modes_sum,
                       plus.abs_err + fourier_tail_bound(p, modes, ctx) +
                           4.0 * kEps * abs_total,
                       plus.terms_used + static_cast<std::size_t>(2 * modes)};
  }
  const Complex lead = -std::pow(one_minus_q, p.nu) / ctx.log_q() *
                       factorial(p.nu - 1) * std::exp(p.t / one_minus_q);
  const SeriesValue minus = F_minus(p, ctx);
  return SeriesValue{lead - minus.value,
                     minus.abs_err + 4.0 * kEps *
                                         (std::abs(lead) + std::abs(minus.value)),
                     minus.terms_used};
}

}  // namespace qhz
