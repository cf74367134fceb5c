#include "qhz/classical.hpp"

#include <array>

namespace qhz {

namespace {

constexpr int kMaxCachedBernoulli = 64;

const std::vector<long double>& bernoulli_cache() {
  static const std::vector<long double> numbers = [] {
    std::vector<long double> b(kMaxCachedBernoulli + 1, 0.0L);
    b[0] = 1.0L;
    for (int m = 1; m <= kMaxCachedBernoulli; ++m) {
      long double acc = 0.0L;
      long double c = 1.0L;  // C(m+1, k)
      for (int k = 0; k < m; ++k) {
        acc += c * b[k];
        c = c * static_cast<long double>(m + 1 - k) /
            static_cast<long double>(k + 1);
      }
      b[m] = -acc / static_cast<long double>(m + 1);
      // odd numbers beyond B_1 vanish; pin them against drift
      if (m > 1 && m % 2 == 1) b[m] = 0.0L;
    }
    return b;
  }();
  return numbers;
}

// B_{2k} / (2k)!, k = 1..11
constexpr std::array<double, 11> kEulerMaclaurin = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21};

constexpr int kCorrectionTerms = 10;

}  // namespace

double bernoulli_number(int m) {
  if (m < 0) throw DomainError("bernoulli_number: m must be non-negative");
  if (m <= kMaxCachedBernoulli) {
    return static_cast<double>(bernoulli_cache()[m]);
  }
  throw DomainError("bernoulli_number: degree above " +
                    std::to_string(kMaxCachedBernoulli));
}

BernoulliTable BernoulliTable::build(int max_degree) {
  BernoulliTable table;
  table.max_degree = max_degree;
  table.coefficients.resize(max_degree + 1);
  for (int m = 0; m <= max_degree; ++m) {
    auto& row = table.coefficients[m];
    row.assign(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
      row[m - k] = binom_int(m, k) * bernoulli_number(k);
    }
  }
  return table;
}

Complex BernoulliTable::eval(int m, Complex z) const {
  if (m < 0 || m > max_degree) {
    throw DomainError("BernoulliTable::eval: degree out of range");
  }
  const auto& row = coefficients[m];
  Complex acc = 0.0;
  for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex bernoulli_poly(int m, Complex z) {
  if (m < 0) throw DomainError("bernoulli_poly: m must be non-negative");
  // Horner in z over the coefficients C(m,k) B_k of z^{m-k}
  Complex acc = 0.0;
  for (int j = m; j >= 0; --j) {
    acc = acc * z + binom_int(m, m - j) * bernoulli_number(m - j);
  }
  return acc;
}

Complex classical_G(Complex t, Complex z) {
  if (std::abs(t) < 1e-6) {
    Complex acc = 0.0;
    Complex power = 1.0;
    for (int m = 0; m < 4; ++m) {
      acc += (m % 2 == 0 ? 1.0 : -1.0) * bernoulli_poly(m, z) * power /
             factorial(m);
      power *= t;
    }
    return acc;
  }
  const Complex denom = qhz::expm1(t);
  if (std::abs(denom) < 1e-300 ||
      (std::abs(t.real()) < 1e-12 &&
       std::abs(std::remainder(t.imag(), 2.0 * kPi)) < 1e-12)) {
    throw DomainError("classical_G: t is a pole (nonzero multiple of 2 pi i)");
  }
  return t * std::exp((1.0 - z) * t) / denom;
}

SeriesValue hurwitz_zeta(Complex s, Complex z, double pole_guard) {
  if (!(z.real() > 0.0)) {
    throw DomainError("hurwitz_zeta: requires Re(z) > 0");
  }
  if (std::abs(s - 1.0) < pole_guard) {
    PoleDescriptor pole{1, 0, Complex(1.0), Complex(1.0)};
    throw NearPoleError("hurwitz_zeta: s is within the pole guard of s = 1",
                        pole);
  }
  constexpr double kTarget = 1e-13;
  // smallest N whose first omitted correction is below the target
  auto remainder_bound = [&](long n) {
    Complex rising = 1.0;
    for (int j = 0; j < 2 * kCorrectionTerms + 1; ++j) {
      rising *= s + static_cast<double>(j);
    }
    const Complex w = static_cast<double>(n) + z;
    return std::abs(kEulerMaclaurin[kCorrectionTerms] * rising *
                    std::exp(-(s + 2.0 * kCorrectionTerms + 1.0) *
                             std::log(w)));
  };
  // start small: for Re s < 0 the head and the tail cancel, growing like N^{1-Re s}
  long n_direct = 2;
  while (remainder_bound(n_direct) > kTarget && n_direct < 100000) {
    n_direct = n_direct * 3 / 2 + 1;
  }

  detail::CompensatedSum re;
  detail::CompensatedSum im;
  double abs_total = 0.0;
  for (long n = 0; n < n_direct; ++n) {
    const Complex term =
        std::exp(-s * std::log(static_cast<double>(n) + z));
    re.add(term.real());
    im.add(term.imag());
    abs_total += std::abs(term);
  }
  const Complex w = static_cast<double>(n_direct) + z;
  const Complex log_w = std::log(w);
  const Complex w_pow = std::exp(-s * log_w);  // w^{-s}
  Complex tail = w * w_pow / (s - 1.0) + 0.5 * w_pow;
  Complex rising = s;  // (s)_{2k-1}
  Complex w_power = w_pow / w;  // w^{-s-1}
  for (int k = 0; k < kCorrectionTerms; ++k) {
    tail += kEulerMaclaurin[k] * rising * w_power;
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    w_power /= w * w;
  }
  re.add(tail.real());
  im.add(tail.imag());
  abs_total += std::abs(tail);

  SeriesValue out;
  out.value = Complex(re.value(), im.value());
  out.abs_err = remainder_bound(n_direct) +
                8.0 * std::numeric_limits<double>::epsilon() * abs_total;
  out.terms_used = static_cast<std::size_t>(n_direct) + kCorrectionTerms;
  return out;
}

}  // namespace qhz
