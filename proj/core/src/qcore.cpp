#include "qhz/qcore.hpp"

#include <array>

namespace qhz {

QContext::QContext(double q, double eps_term, std::size_t max_terms,
                   double pole_guard)
    : q_(q), eps_term_(eps_term), max_terms_(max_terms),
      pole_guard_(pole_guard) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("QContext: q must lie in (0,1), got " +
                      std::to_string(q));
  }
  if (!(eps_term > 0.0) || !(pole_guard > 0.0) || max_terms < 1) {
    throw DomainError(
        "QContext: eps_term and pole_guard must be positive, max_terms >= 1");
  }
  log_q_ = std::log(q);
  delta_ = Complex(0.0, 2.0 * kPi / log_q_);
}

Complex q_pow(Complex z, const QContext& ctx) {
  return std::exp(z * ctx.log_q());
}

Complex expm1(Complex w) {
  const double x = w.real();
  const double y = w.imag();
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

Complex log1p(Complex w) {
  if (std::abs(w) < 0.1) {
    // alternating series; |w| < 0.1 gives 16 digits in 16 terms
    Complex power = w;
    Complex sum = 0.0;
    for (int k = 1; k <= 18; ++k) {
      sum += (k % 2 == 1 ? 1.0 : -1.0) * power / static_cast<double>(k);
      power *= w;
    }
    return sum;
  }
  return std::log(1.0 + w);
}

Complex q_number(Complex z, const QContext& ctx) {
  const Complex w = z * ctx.log_q();
  if (w.real() > 700.0) {
    throw RangeError("q_number: q^z overflows (Re(z) log q = " +
                     std::to_string(w.real()) + ")");
  }
  return -expm1(w) / (1.0 - ctx.q());
}

bool in_domain_Dq(Complex z, const QContext& ctx) {
  return std::abs(z.imag()) < 0.5 * kPi / std::abs(ctx.log_q());
}

bool in_domain_Jq(Complex z, const QContext& ctx) {
  if (!in_domain_Dq(z, ctx) || !(z.real() > 0.0)) return false;
  return std::exp(-z.real() * ctx.log_q()) *
             std::cos(z.imag() * ctx.log_q()) >
         1.0;
}

double arg_half_open(Complex t) {
  const double a = std::arg(t);
  return a >= kPi ? a - 2.0 * kPi : a;
}

bool in_sector_Rq(Complex t, Complex z, const QContext& ctx) {
  if (t == Complex(0.0)) {
    throw DomainError("in_sector_Rq: t = 0 has no argument");
  }
  return std::abs(arg_half_open(t) - z.imag() * ctx.log_q()) < 0.5 * kPi;
}

namespace {

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 &&
         s.real() == std::floor(s.real());
}

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,    1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,    -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0};

}  // namespace

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s)) {
    throw GammaPoleError("log_gamma: pole at s = " +
                         std::to_string(s.real()));
  }
  // shift into the region where the Stirling series is accurate
  Complex shift_sum = 0.0;
  Complex w = s;
  while (w.real() < 1.0 || std::abs(w) < 15.0) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * kPi);
  return (w - 0.5) * std::log(w) - w + half_log_2pi + series - shift_sum;
}

Complex gamma(Complex s) {
  const Complex g = std::exp(log_gamma(s));
  if (!is_finite(g)) {
    throw RangeError("gamma: overflow");
  }
  return g;
}

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s)) return 0.0;
  return std::exp(-log_gamma(s));
}

double log_abs_gamma_imag(int nu, double y) {
  y = std::abs(y);
  double out = 0.0;
  if (y > 0.0) {
    const double py = kPi * y;
    const double log_sinh =
        py > 20.0 ? py - std::log(2.0) : std::log(std::sinh(py));
    out = 0.5 * (std::log(py) - log_sinh);
  }
  for (int j = 1; j < nu; ++j) {
    out += 0.5 * std::log(static_cast<double>(j) * j + y * y);
  }
  return out;
}

Complex binom_complex(Complex s, long l) {
  if (l < 0) {
    throw DomainError("binom_complex: l must be non-negative");
  }
  Complex c = 1.0;
  for (long j = 0; j < l; ++j) {
    c *= (s + static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return c;
}

double binom_int(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (long i = 1; i <= k; ++i) {
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(r);
}

double factorial(long n) {
  double r = 1.0;
  for (long i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

}  // namespace qhz
