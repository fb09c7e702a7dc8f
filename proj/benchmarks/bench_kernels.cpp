#include <benchmark/benchmark.h>

#include "mathieu/hurwitz.hpp"
#include "mathieu/mathieu.hpp"
#include "mathieu/polylog.hpp"
#include "mathieu/special.hpp"
#include "mathieu/trig.hpp"

namespace {

using mathieu::Complex;

void BM_ComplexGamma(benchmark::State& state) {
  Complex w(3.7, 11.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mathieu::complex_gamma(w));
  }
}
BENCHMARK(BM_ComplexGamma);

void BM_HurwitzZetaAuto(benchmark::State& state) {
  mathieu::HurwitzQuery query{Complex(-2.5, 8.0), Complex(0.5, 0.25)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mathieu::hurwitz_zeta(query));
  }
}
BENCHMARK(BM_HurwitzZetaAuto);

void BM_PolylogSeries(benchmark::State& state) {
  mathieu::PolylogQuery query{Complex(2.5, 0.0), Complex(-0.9, 0.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mathieu::polylog_series(query, 1e-12));
  }
}
BENCHMARK(BM_PolylogSeries);

void BM_PolylogJonquiere(benchmark::State& state) {
  mathieu::PolylogQuery query{Complex(2.5, 0.0), Complex(-0.9, 0.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mathieu::polylog_jonquiere(query));
  }
}
BENCHMARK(BM_PolylogJonquiere);

void BM_MathieuDirect(benchmark::State& state) {
  mathieu::MathieuParams params{1.0, static_cast<double>(state.range(0)),
                                Complex(-1.0, 0.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mathieu::mathieu_direct(params, 1e-10));
  }
}
BENCHMARK(BM_MathieuDirect)->Arg(10)->Arg(100);

void BM_AsymEvalAuto(benchmark::State& state) {
  mathieu::MathieuParams params{1.0, 30.0, Complex(-1.0, 0.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mathieu::asym_eval(params, {}));
  }
}
BENCHMARK(BM_AsymEvalAuto);

void BM_GeneralSineSeries(benchmark::State& state) {
  mathieu::SeriesFamilyParams fam{1.0, 2.0, 0.0, 0.0, 1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mathieu::general_sine_series(fam, 0.1, 1e-8));
  }
}
BENCHMARK(BM_GeneralSineSeries);

}  // namespace

BENCHMARK_MAIN();
