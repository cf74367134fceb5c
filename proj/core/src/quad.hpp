#pragma once

// binary128 helpers for the evaluations whose closed forms lose
// (1-q)^{1-m} digits to cancellation. Private to the core library.

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "qhz/qcore.hpp"

namespace qhz::detail {

using Quad = boost::multiprecision::float128;
using QuadComplex = boost::multiprecision::complex128;

inline QuadComplex to_quad(Complex z) {
  return QuadComplex(Quad(z.real()), Quad(z.imag()));
}

inline Complex to_double(const QuadComplex& z) {
  return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

inline Quad quad_abs(const QuadComplex& z) {
  return boost::multiprecision::abs(z);
}

inline QuadComplex quad_expm1(const QuadComplex& w) {
  const Quad x = w.real();
  const Quad y = w.imag();
  const Quad s = boost::multiprecision::sin(y / 2);
  const Quad re =
      boost::multiprecision::expm1(x) * boost::multiprecision::cos(y) -
      2 * s * s;
  const Quad im = boost::multiprecision::exp(x) * boost::multiprecision::sin(y);
  return QuadComplex(re, im);
}

/// q and its logarithm carried in binary128.
struct QuadQ {
  Quad q;
  Quad log_q;
  Quad one_minus_q;

  explicit QuadQ(const QContext& ctx)
      : q(ctx.q()),
        log_q(boost::multiprecision::log(Quad(ctx.q()))),
        one_minus_q(Quad(1) - Quad(ctx.q())) {}

  /// q^w
  QuadComplex pow(const QuadComplex& w) const {
    return boost::multiprecision::exp(w * log_q);
  }
  /// 1 - q^w
  QuadComplex one_minus_pow(const QuadComplex& w) const {
    return -quad_expm1(w * log_q);
  }
};

}  // namespace qhz::detail
