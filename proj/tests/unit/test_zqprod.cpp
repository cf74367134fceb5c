#include <doctest.h>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "qhz/errors.hpp"
#include "qhz/qzeta.hpp"
#include "qhz/zqprod.hpp"

using namespace qhz;
using testing::rel_err;

TEST_CASE("log series against high-precision values") {
  CHECK(rel_err(log_Z(1.0, 1.0, QContext(0.5)).value, oracle::kLogZ_1_1_q05) < 1e-14);
  CHECK(rel_err(log_Z(2.5, Complex(1.0, 0.5), QContext(0.8)).value, oracle::kLogZ_2p5_c_q08) < 1e-13);
  const QContext ctx(0.5);
  CHECK(std::abs(log_Z(0.0, 1.3, ctx).value + std::log1p(-std::pow(0.5, 1.3))) < 1e-15);
  CHECK(std::abs(log_Z(2.0, 80.0, ctx).value) < 1e-20);
  CHECK_THROWS_AS(log_Z(1.0, -0.5, ctx), DomainError);
}

TEST_CASE("product equals exponentiated series") {
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (double s : {0.0, 1.0, 2.5}) {
      for (double t : {1.0, 2.0}) {
        const ProductValue p = Z_product(s, t, ctx);
        CHECK(rel_err(p.value, std::exp(log_Z(s, t, ctx).value)) < 1e-10);
        CHECK(rel_err(p.value, std::exp(p.log_value)) < 1e-15);
      }
      CHECK(std::abs(Z_product(0.0, 1.5, ctx).value * (1.0 - std::pow(q, 1.5)) - 1.0) < 1e-12);
    }
  }
  const QContext h(0.5);
  CHECK(rel_err(Z_product(1.5, 2.0, h).value, std::exp(log_Z(1.5, 2.0, h).value)) < 1e-10);
  CHECK(Z_product_depth(1.5, 2.0, 1e-12, h) < Z_product_depth(1.5, 2.0, 1e-15, h));
  CHECK_THROWS_AS(Z_product(1.0, 1.0, -1, h), DomainError);
}

TEST_CASE("finite products at negative integers") {
  const QContext h(0.5);
  CHECK(std::abs(Z_neg(1, 1.0, h) - 1.5) < 1e-15);
  CHECK(std::abs(Z_neg(2, 1.0, h) - 0.75 * 0.75 / (0.5 * 0.875)) < 1e-15);
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (int m = 1; m <= 3; ++m) {
      for (double t : {1.0, 2.0}) {
        CHECK(rel_err(Z_product(double(-m), t, ctx).value, Z_neg(m, t, ctx)) < 1e-12);
      }
    }
  }
}

TEST_CASE("Appell O inverts Z at positive integers") {
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (int m = 1; m <= 3; ++m) {
      for (double t : {1.0, 2.0}) {
        CHECK(std::abs(appell_O(t, m, ctx) * Z_product(double(m), t, ctx).value - 1.0) < 1e-9);
      }
    }
  }
  const QContext h(0.5);
  CHECK(std::abs(appell_O(1.0, 2, h) * Z_product(2.0, 1.0, h).value - 1.0) < 1e-10);
  Complex naive = 1.0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) naive *= 1.0 - std::pow(0.5, a + b + 1.0);
  CHECK(rel_err(appell_O(1.0, 2, 6, h), naive) < 1e-14);
  CHECK(rel_err(appell_O(1.0, 1, 5, h), appell_O_weighted(1.0, {1}, 5, h)) < 1e-15);
  CHECK(rel_err(appell_O(1.3, 3, 12, h), appell_O_weighted(1.3, {1, 1, 1}, 12, h)) < 1e-14);
  Complex naive_w = 1.0;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + 2 * b <= 8; ++b) naive_w *= 1.0 - std::pow(0.5, a + 2 * b + 1.0);
  CHECK(rel_err(appell_O_weighted(1.0, {1, 2}, 8, h), naive_w) < 1e-14);
}

TEST_CASE("ladder relations") {
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (double s : {0.0, 1.0, 2.5}) {
      for (double t : {1.0, 2.0}) {
        for (int m : {1, 2}) {
          const auto reports = verify_ladders(s, t + m, m, ctx);
          CHECK(reports.size() == 5);
          for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.identity << " rel " << r.rel_diff);
        }
        CHECK(verify_ladders(s, t, 2, ctx).size() == 4);
      }
    }
  }
  const auto r = verify_ladders(1.5, 1.0, 1, QContext(0.5));
  CHECK(std::abs(r.back().lhs - r.back().rhs) < 1e-10);
}

TEST_CASE("zeta as logarithmic derivative of Z") {
  const QContext h(0.5);
  CHECK(rel_err(zeta_from_Z(1, 4.0, h).value, zeta_nu_direct({1, 4.0, 1.0}, h).value) < 1e-12);
  const QContext c3(0.3);
  CHECK(rel_err(zeta_from_Z(2, 3.5, c3).value, zeta_nu_direct({2, 3.5, 1.0}, c3).value) < 1e-12);
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (int nu : {1, 2, 3}) {
      for (Complex s : {Complex(nu + 0.5), Complex(nu + 2.0, 1.0)}) {
        CHECK(rel_err(zeta_from_Z(nu, s, ctx).value, zeta_nu_direct({nu, s, 1.0}, ctx).value) < 1e-12);
        const Complex t = s - double(nu);
        const double e = 1e-5;
        const Complex fd = std::pow(Complex(1 - q), s) / ctx.log_q() *
                           (log_Z(s, t + e, ctx).value - log_Z(s, t - e, ctx).value) / (2 * e);
        CHECK(rel_err(fd, zeta_from_Z(nu, s, ctx).value) < 1e-7);
      }
    }
  }
  CHECK_THROWS_AS(zeta_from_Z(2, 1.5, h), DomainError);
}

TEST_CASE("recurrences in nu") {
  CHECK(verify_zeta_recurrences(2, 1, 5.0, QContext(0.5), 1e-11).pass);
  CHECK(verify_zeta_recurrences(3, 2, 7.0, QContext(0.3), 1e-10).pass);
  CHECK(verify_zeta_recurrence_z(2, 3.5, 1.5, QContext(0.5)).pass);
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext ctx(q);
    for (int nu = 2; nu <= 4; ++nu) {
      for (int m = 1; m < nu; ++m) CHECK(verify_zeta_recurrences(nu, m, nu + 1.5, ctx).pass);
      CHECK(verify_zeta_recurrence_z(nu, Complex(nu + 1.5, 0.7), 0.8, ctx).pass);
    }
  }
  CHECK_THROWS_AS(verify_zeta_recurrences(2, 2, 5.0, QContext(0.5)), DomainError);
}
