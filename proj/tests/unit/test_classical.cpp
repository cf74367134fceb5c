#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "qhz/classical.hpp"
#include "qhz/errors.hpp"

using namespace qhz;
using testing::rel_err;

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1.0);
  CHECK(bernoulli_number(1) == -0.5);
  CHECK(std::abs(bernoulli_number(2) - 1.0 / 6.0) < 1e-16);
  CHECK(std::abs(bernoulli_number(12) + 691.0 / 2730.0) < 1e-14);
  CHECK(bernoulli_number(7) == 0.0);
  CHECK(std::abs(bernoulli_poly(2, 0.5) - (0.25 - 0.5 + 1.0 / 6.0)) < 1e-15);
  CHECK(std::abs(bernoulli_poly(1, 1.0) - 0.5) < 1e-15);
}

TEST_CASE("classical generating function") {
  CHECK(std::abs(classical_G(1.0, 1.0) - 1.0 / (std::exp(1.0) - 1.0)) < 1e-15);
  CHECK(std::abs(classical_G(1e-9, 0.3) - 1.0) < 1e-8);
  CHECK_THROWS_AS(classical_G(Complex(0.0, 2.0 * kPi), 0.5), DomainError);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uz(0.0, 2.0), ut(-0.7, 0.7);
  for (int i = 0; i < 50; ++i) {
    const Complex t(ut(rng), ut(rng));
    const double z = uz(rng);
    Complex series = 0.0, tm = 1.0;
    for (int m = 0; m <= 20; ++m) {
      series += (m % 2 ? -1.0 : 1.0) * bernoulli_poly(m, z) * tm;
      tm *= t / double(m + 1);
    }
    CHECK(std::abs(classical_G(t, z) - series) < 1e-10);
  }
}

TEST_CASE("Hurwitz zeta values") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0).value - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(0.0, 1.0).value + 0.5) < 1e-13);
  CHECK(std::abs(hurwitz_zeta(-1.0, 1.0).value + 1.0 / 12.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(4.0, 1.0).value - std::pow(kPi, 4) / 90.0) < 1e-12);
  CHECK(rel_err(hurwitz_zeta(2.5, 1.3).value, oracle::kHurwitz_2p5_1p3) < 1e-12);
  CHECK(rel_err(hurwitz_zeta(Complex(-1.5, 2.0), 0.7).value, oracle::kHurwitz_m1p5p2i_0p7) < 1e-10);
  CHECK_THROWS_AS(hurwitz_zeta(1.0 + 1e-5, 1.0), NearPoleError);
}

TEST_CASE("Hurwitz zeta special values and shift") {
  for (int m = 1; m <= 6; ++m) {
    for (double z : {0.5, 1.0, 1.5}) {
      const Complex expect = -bernoulli_poly(m, z) / double(m);
      const Complex got = hurwitz_zeta(1.0 - m, z).value;
      if (std::abs(expect) < 1e-14) {
        CHECK(std::abs(got) < 1e-12);
      } else {
        CHECK(rel_err(got, expect) < 1e-9);
      }
    }
  }
  for (Complex s : {Complex(2.5), Complex(-0.5, 1.0), Complex(0.3, -4.0)}) {
    for (double z : {0.4, 1.2}) {
      const Complex d = hurwitz_zeta(s, z).value - hurwitz_zeta(s, z + 1.0).value;
      CHECK(std::abs(d - std::pow(Complex(z), -s)) < 1e-11);
    }
  }
}
