#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "qhz/classical.hpp"
#include "qhz/errors.hpp"
#include "qhz/genfun.hpp"
#include "qhz/qbernoulli.hpp"

using namespace qhz;
using testing::rel_err;

TEST_CASE("generating functions against high-precision values") {
  const QContext h(0.5);
  CHECK(rel_err(F_plus({1, 1.0, 1.0}, h).value, oracle::kFplus_1_1_1_q05) < 1e-13);
  CHECK(rel_err(F_plus({2, 0.7, 0.3}, QContext(0.3)).value, oracle::kFplus_2_0p7_0p3_q03) < 1e-13);
  CHECK(rel_err(F_plus({1, Complex(1, 0.3), Complex(1, 0.1)}, h).value, oracle::kFplus_1_c_c_q05) < 1e-13);
  CHECK(rel_err(F_minus({1, 1.0, 1.0}, h).value, oracle::kFminus_1_1_1_q05) < 1e-13);
  CHECK(rel_err(F_minus({3, -2.0, 0.4}, QContext(0.7)).value, oracle::kFminus_3_m2_0p4_q07) < 1e-12);
  CHECK(rel_err(G_q({2, 0.5, 1.3}, h).value, oracle::kGq_2_0p5_1p3_q05) < 1e-13);
}

TEST_CASE("elementary values") {
  const QContext ctx(0.5);
  CHECK(F_minus({1, 0.0, 1.0}, ctx).value == Complex(0.0));
  CHECK(F_plus({2, 1.5, 0.7}, ctx).value.imag() == 0.0);
  CHECK_THROWS_AS(F_plus({1, -1.0, 1.0}, ctx), DomainError);
  for (int nu : {1, 2, 3}) {
    const double g0 = -std::pow(0.5, nu) / ctx.log_q() * factorial(nu - 1);
    CHECK(std::abs(G_q({nu, 0.0, 0.4}, ctx).value - g0) < 1e-15);
    const double m0 = std::abs(g0 * std::exp(0.7 / 0.5));
    CHECK(std::abs(F_fourier({nu, 0.7, 0.4}, 0, ctx).value - g0 * std::exp(0.7 / 0.5)) < 1e-14 * m0);
  }
}

TEST_CASE("functional equations on random points") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uq(0.2, 0.7), ut(0.05, 1.5), ux(0.2, 1.8), u(-1.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    const QContext ctx(uq(rng));
    const int nu = 1 + i % 3;
    const Complex z(ux(rng), 0.3 * u(rng) * (kPi / 2) / -ctx.log_q());
    const Complex t = std::polar(ut(rng), z.imag() * ctx.log_q() + 0.6 * u(rng));
    REQUIRE(in_sector_Rq(t, z, ctx));
    const double q = ctx.q();
    const Complex extra = std::pow(t, nu) * q_pow(double(nu) * (1.0 - z), ctx) *
                          std::exp(t * q_number(1.0 - z, ctx));
    const Complex fp = F_plus({nu, t, z}, ctx).value;
    const Complex fm = F_minus({nu, t, z}, ctx).value;
    const double scale_p = std::max(std::abs(fp), std::abs(extra));
    const double scale_m = std::max(std::abs(fm), std::abs(extra));
    CHECK(std::abs(F_plus({nu, q * t, z}, ctx).value - std::exp(-t) * (fp + extra)) < 1e-11 * scale_p);
    CHECK(std::abs(F_minus({nu, q * t, z}, ctx).value - std::exp(-t) * (fm - extra)) < 1e-11 * scale_m);
    const Complex g = G_q({nu, t, z}, ctx).value;
    CHECK(std::abs(G_q({nu, q * t, z}, ctx).value - std::exp(-t) * (g + extra)) <
          1e-11 * std::max(std::abs(g), std::abs(extra)));
  }
}

TEST_CASE("Poisson summation grid") {
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (int nu : {1, 2, 3}) {
      for (double t : {0.3, 0.7, 1.0, 2.0}) {
        for (double z : {0.25, 0.5, 1.0}) {
          const auto a = F_bilateral({nu, t, z}, ctx);
          const auto b = F_fourier({nu, t, z}, ctx);
          CHECK(std::abs(a.value - b.value) < std::max(1e-10, a.abs_err + b.abs_err));
          CHECK(std::abs(b.value.imag()) == 0.0);
        }
      }
    }
  }
  const QContext h(0.5);
  CHECK(std::abs(F_bilateral({1, 0.7, 0.25}, h).value - F_fourier({1, 0.7, 0.25}, 30, h).value) < 1e-10);
  CHECK(std::abs(F_bilateral({1, 1.0, 0.3}, h).value - F_fourier({1, 1.0, 0.3}, h).value) < 1e-10);
}

TEST_CASE("Fourier truncation bookkeeping") {
  const QContext ctx(0.8);
  const GenfunPoint p{2, 1.0, 0.5};
  const int m = fourier_modes_needed(p, 1e-14, ctx);
  CHECK(fourier_tail_bound(p, m, ctx) < 1e-14 * std::abs(F_fourier(p, 0, ctx).value) + 1e-14);
  CHECK(fourier_tail_bound(p, m + 1, ctx) < fourier_tail_bound(p, m, ctx));
  CHECK(std::abs(F_fourier(p, 3, ctx).value - F_fourier({2, 1.0, 1.5}, 3, ctx).value) < 1e-13);
}

TEST_CASE("periodicity and decomposition") {
  for (double q : {0.3, 0.6}) {
    const QContext ctx(q);
    for (int nu : {1, 3}) {
      for (double z : {0.2, 0.9}) {
        const Complex a = F_bilateral({nu, 0.8, z}, ctx).value;
        const Complex b = F_bilateral({nu, 0.8, z + 1.0}, ctx).value;
        CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(a)));
        const Complex t(0.6, 0.4);
        const Complex sum = G_q({nu, t, z}, ctx).value + F_minus({nu, t, z}, ctx).value +
                            std::pow(1.0 - q, nu) / ctx.log_q() * factorial(nu - 1) *
                                std::exp(t / (1.0 - q));
        CHECK(std::abs(sum) < 1e-12 * std::max(1.0, std::abs(G_q({nu, t, z}, ctx).value)));
      }
    }
  }
}

TEST_CASE("majorant of F_plus") {
  const QContext ctx(0.5);
  CHECK(bound_F_plus({1, 1.0, 1.0}, ctx) >= std::abs(F_plus({1, 1.0, 1.0}, ctx).value));
  for (double t : {0.1, 0.5, 2.0, 8.0}) {
    for (Complex z : {Complex(1.0), Complex(1.5, 0.3), Complex(0.6)}) {
      CHECK(bound_F_plus({2, t, z}, ctx) >= std::abs(F_plus({2, t, z}, ctx).value));
    }
  }
  CHECK(bound_F_plus({2, 60.0, 1.5}, ctx) < 1e-10);
  CHECK_THROWS_AS(bound_F_plus({1, 1.0, -1.0}, ctx), DomainError);
}

TEST_CASE("q to 1 limit of F_plus and G_q") {
  double prev = INFINITY;
  for (int k = 3; k <= 10; ++k) {
    const QContext ctx(1.0 - std::ldexp(1.0, -k));
    const double err = std::abs(classical_G(1.0, 1.0) - F_plus({1, 1.0, 1.0}, ctx).value);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
  prev = INFINITY;
  for (int k = 3; k <= 10; ++k) {
    const QContext ctx(1.0 - std::ldexp(1.0, -k));
    const double err = std::abs(G_q({1, 1.0, 1.0}, ctx).value - 1.0 / (std::exp(1.0) - 1.0));
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("G_q away from the cancelling closed form") {
  // Re t / (1-q) above the switch: compare with the Taylor expansion
  const QContext ctx(0.9);
  for (int nu : {1, 2}) {
    for (Complex t : {Complex(2.6), Complex(3.0, 0.5)}) {
      const Complex z = 0.8;
      const auto c = gq_taylor_coefficients(nu, 70, z, ctx);
      Complex series = 0.0, tk = 1.0;
      for (const Complex& ck : c) {
        series += ck * tk;
        tk *= t;
      }
      const auto g = G_q({nu, t, z}, ctx);
      CHECK(rel_err(g.value, series) < 1e-12);
    }
  }
}
