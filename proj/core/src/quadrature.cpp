#include "qhz/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace qhz {

namespace {

// Kronrod nodes (non-negative half) and weights; the odd-indexed nodes are
// the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  Complex value;
  double err;
  double scale;
  bool operator<(const Panel& other) const { return err < other.err; }
};

Panel gauss_kronrod(const std::function<Complex(double)>& f, double a,
                    double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(center);
  Complex kronrod = fc * kKronrod[7];
  Complex gauss = fc * kGauss[3];
  double abs_sum = std::abs(fc) * kKronrod[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const Complex f1 = f(center - dx);
    const Complex f2 = f(center + dx);
    kronrod += kKronrod[j] * (f1 + f2);
    abs_sum += kKronrod[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kGauss[j / 2] * (f1 + f2);
  }
  Panel p{a, b, kronrod * half, 0.0, 0.0};
  const double diff = std::abs((kronrod - gauss) * half);
  // QUADPACK-style scaling of the embedded estimate, floored by rounding
  const double scale = std::abs(half) * abs_sum;
  double err = diff;
  if (scale > 0.0 && diff > 0.0) {
    err = std::min(diff, scale * std::pow(200.0 * diff / scale, 1.5));
  }
  if (!is_finite(p.value)) {
    throw RangeError("integrate: non-finite integrand value");
  }
  p.err = err;
  p.scale = scale;
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           std::size_t max_panels) {
  QuadratureResult out;
  if (a == b) return out;
  std::priority_queue<Panel> heap;
  heap.push(gauss_kronrod(f, a, b));
  std::size_t evaluations = 15;
  Complex total = heap.top().value;
  double total_err = heap.top().err;
  double total_scale = heap.top().scale;
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
  while (total_err > std::max({abs_tol, rel_tol * std::abs(total),
                               kRoundoff * total_scale})) {
    if (heap.size() >= max_panels) {
      throw ConvergenceError("integrate: panel budget exhausted (error " +
                             std::to_string(total_err) + ")");
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    total_scale += left.scale + right.scale - worst.scale;
    heap.push(left);
    heap.push(right);
  }
  // re-sum to shed the drift of the running updates
  Complex sum = 0.0;
  double err = 0.0;
  double scale = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().err;
    scale += heap.top().scale;
    heap.pop();
  }
  out.value = sum;
  out.abs_err = std::max(err, kRoundoff * scale);
  out.evaluations = evaluations;
  return out;
}

}  // namespace qhz
