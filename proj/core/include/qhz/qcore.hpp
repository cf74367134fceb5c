#pragma once

// Shared substrate: q-context, q-numbers, domain predicates, compensated
// series summation, complex log-gamma and generalized binomial coefficients.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "qhz/errors.hpp"

namespace qhz {

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// A complex value with an absolute error estimate and the number of terms
/// (or integrand evaluations) that produced it.
struct SeriesValue {
  Complex value;
  double abs_err = 0.0;
  std::size_t terms_used = 0;
};

/// The deformation parameter q in (0,1) with its derived constants and the
/// evaluation tolerances shared by every routine. Immutable.
class QContext {
 public:
  static constexpr double kDefaultEpsTerm = 1e-15;
  static constexpr std::size_t kDefaultMaxTerms = 100000;
  static constexpr double kDefaultPoleGuard = 1e-3;

  explicit QContext(double q, double eps_term = kDefaultEpsTerm,
                    std::size_t max_terms = kDefaultMaxTerms,
                    double pole_guard = kDefaultPoleGuard);

  double q() const noexcept { return q_; }
  double log_q() const noexcept { return log_q_; }
  /// 2*pi*i / log q; purely imaginary with negative imaginary part.
  Complex delta() const noexcept { return delta_; }
  double eps_term() const noexcept { return eps_term_; }
  std::size_t max_terms() const noexcept { return max_terms_; }
  double pole_guard() const noexcept { return pole_guard_; }

  /// Same tolerances, different q.
  QContext with_q(double q) const {
    return QContext(q, eps_term_, max_terms_, pole_guard_);
  }

 private:
  double q_;
  double log_q_;
  Complex delta_;
  double eps_term_;
  std::size_t max_terms_;
  double pole_guard_;
};

/// q^z with the real branch of log q.
Complex q_pow(Complex z, const QContext& ctx);

/// exp(w) - 1 without cancellation for small |w|.
Complex expm1(Complex w);

/// log(1 + w) without cancellation for small |w|.
Complex log1p(Complex w);

/// [z]_q = (1 - q^z)/(1 - q). Throws RangeError when q^z overflows.
Complex q_number(Complex z, const QContext& ctx);

/// |Im z| < (pi/2)/|log q|.
bool in_domain_Dq(Complex z, const QContext& ctx);

/// z in D_q, Re z > 0 and q^{-Re z} cos(Im z log q) > 1.
bool in_domain_Jq(Complex z, const QContext& ctx);

/// Argument in [-pi, pi).
double arg_half_open(Complex t);

/// |arg t - Im(z) log q| < pi/2 with arg in [-pi, pi). Throws DomainError
/// for t = 0.
bool in_sector_Rq(Complex t, Complex z, const QContext& ctx);

/// Principal-branch log Gamma. Throws GammaPoleError at 0, -1, -2, ...
Complex log_gamma(Complex s);

/// Gamma(s) = exp(log_gamma(s)).
Complex gamma(Complex s);

/// 1/Gamma(s), entire; exactly zero at the non-positive integers.
Complex rgamma(Complex s);

/// log |Gamma(nu + i y)| for integer nu >= 1, exact via
/// |Gamma(1+iy)|^2 = pi y / sinh(pi y).
double log_abs_gamma_imag(int nu, double y);

/// Generalized binomial coefficient C(s+l-1, l) by the upward product
/// recurrence. Requires l >= 0.
Complex binom_complex(Complex s, long l);

/// Integer binomial C(n, k) as a double (0 outside 0 <= k <= n).
double binom_int(long n, long k);

/// n! as a double.
double factorial(long n);

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Knobs for sum_series beyond the QContext defaults.
struct SeriesOptions {
  /// Never stop before this many terms have been added.
  std::size_t min_terms = 0;
  /// Smallness is measured against max(|partial|, floor).
  double floor = 1.0;
  /// Known bound on the term ratio beyond the stopping point; when in (0,1)
  /// the geometric tail |last| r/(1-r) is added to abs_err.
  double tail_ratio = 0.0;
};

namespace detail {

/// Neumaier-compensated accumulator for one real component.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace detail

/// Sums term(0) + term(1) + ... with compensated summation. Stops once three
/// consecutive terms each satisfy |term| < eps_term * max(|partial|, floor)
/// and at least options.min_terms terms were added. Throws ConvergenceError
/// when max_terms is reached, RangeError when a term is not finite.
template <class TermFn>
SeriesValue sum_series(TermFn&& term, const QContext& ctx,
                       const SeriesOptions& options = {}) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  detail::CompensatedSum re;
  detail::CompensatedSum im;
  double abs_total = 0.0;
  double block[3] = {0.0, 0.0, 0.0};
  int small_run = 0;
  double last = 0.0;
  for (std::size_t n = 0; n < ctx.max_terms(); ++n) {
    const Complex t = term(n);
    if (!is_finite(t)) {
      throw RangeError("sum_series: non-finite term at index " +
                       std::to_string(n));
    }
    re.add(t.real());
    im.add(t.imag());
    const double mag = std::abs(t);
    abs_total += mag;
    block[n % 3] = mag;
    last = mag;
    const double partial = std::abs(Complex(re.value(), im.value()));
    if (mag < ctx.eps_term() * std::max(partial, options.floor)) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run >= 3 && n + 1 >= options.min_terms) {
      SeriesValue out;
      out.value = Complex(re.value(), im.value());
      out.terms_used = n + 1;
      out.abs_err = block[0] + block[1] + block[2] + 4.0 * kEps * abs_total;
      if (options.tail_ratio > 0.0 && options.tail_ratio < 1.0) {
        out.abs_err += last * options.tail_ratio / (1.0 - options.tail_ratio);
      }
      return out;
    }
  }
  throw ConvergenceError("sum_series: no convergence within " +
                         std::to_string(ctx.max_terms()) + " terms");
}

}  // namespace qhz
