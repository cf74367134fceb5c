#include <benchmark/benchmark.h>

#include "qhz/classical.hpp"
#include "qhz/genfun.hpp"
#include "qhz/qbernoulli.hpp"
#include "qhz/qzeta.hpp"
#include "qhz/zqprod.hpp"

using namespace qhz;

namespace {

void BM_Route(benchmark::State& state) {
  const QContext ctx(0.5);
  const ZetaQuery query{2, 4.5, 1.5, static_cast<ZetaMethod>(state.range(0))};
  state.SetLabel(to_string(query.method));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_nu(query, ctx));
}
BENCHMARK(BM_Route)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_BinomialContinuation(benchmark::State& state) {
  const QContext ctx(0.5);
  const ZetaQuery query{2, Complex(-2.5, 3.0), 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(zeta_nu_binomial(query, ctx));
}
BENCHMARK(BM_BinomialContinuation)->Unit(benchmark::kMicrosecond);

void BM_BinomialNearOne(benchmark::State& state) {
  const QContext ctx(1.0 - std::ldexp(1.0, -static_cast<int>(state.range(0))));
  const ZetaQuery query{1, 2.5, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(zeta_nu_binomial(query, ctx));
}
BENCHMARK(BM_BinomialNearOne)->Arg(4)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Bernoulli(benchmark::State& state) {
  const QContext ctx(0.9);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(b_value(3, m, 1.7, ctx));
    benchmark::DoNotOptimize(b_value_recursive(3, m, 1.7, ctx));
  }
}
BENCHMARK(BM_Bernoulli)->Arg(2)->Arg(8)->Arg(16);

void BM_Poisson(benchmark::State& state) {
  const QContext ctx(0.8);
  const GenfunPoint p{3, 0.7, 0.25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(F_bilateral(p, ctx));
    benchmark::DoNotOptimize(F_fourier(p, ctx));
  }
}
BENCHMARK(BM_Poisson);

void BM_ZProduct(benchmark::State& state) {
  const QContext ctx(0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_Z(2.5, 1.0, ctx));
    benchmark::DoNotOptimize(Z_product(2.5, 1.0, ctx));
  }
}
BENCHMARK(BM_ZProduct);

void BM_Hurwitz(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_zeta(Complex(0.5, 14.0), 1.0));
}
BENCHMARK(BM_Hurwitz);

}  // namespace

BENCHMARK_MAIN();
