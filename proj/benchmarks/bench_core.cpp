#include <benchmark/benchmark.h>

#include "frobkit/intertwine.hpp"
#include "frobkit/matrix.hpp"
#include "frobkit/presets.hpp"
#include "frobkit/witt.hpp"

using namespace frobkit;

namespace {

void BM_WittPolys(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  long k = 0;
  for (auto _ : state) {
    // The polynomial sets are cached per Eisenstein polynomial, so each
    // iteration uses a new one, x^2 - 3(3k + 1).
    ++k;
    auto F = Field::make(3, {mpz_class(-3 * (3 * k + 1)), mpz_class(0), mpz_class(1)});
    benchmark::DoNotOptimize(witt_polys(F, n));
  }
}
BENCHMARK(BM_WittPolys)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_OFMul(benchmark::State& state) {
  auto F = Field::make(3, {mpz_class(-3), mpz_class(0), mpz_class(1)});
  const int prec = static_cast<int>(state.range(0));
  OFElement a(F, 12345L, prec), b(F, 67891L, prec);
  a = a + OFElement::uniformizer(F, prec);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_OFMul)->Arg(20)->Arg(80);

void BM_Compose(benchmark::State& state) {
  auto F = Field::rational(3);
  const int cap = static_cast<int>(state.range(0));
  const USeries f = make_preset("cyclotomic", F, 30).f.series(cap);
  const USeries h = USeries::from_integers(F, {0, 1, 2, 3, 4, 5, 6}, 30, cap);
  for (auto _ : state) benchmark::DoNotOptimize(compose(h, f));
}
BENCHMARK(BM_Compose)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_Intertwiner(benchmark::State& state) {
  auto F = Field::rational(3);
  const int M = static_cast<int>(state.range(0)), N = 10;
  const FrobLift probe = make_preset("cyclotomic", F, 60).f;
  std::vector<OFElement> c{OFElement(F, 3L, 60), OFElement::zero(F, 60), OFElement::one(F, 60)};
  const int need = required_precision(probe, FrobLift::make(c), M, N);
  const FrobLift f = make_preset("cyclotomic", F, need).f;
  const FrobLift f2 = FrobLift::make({OFElement(F, 3L, need), OFElement::zero(F, need), OFElement::one(F, need)});
  for (auto _ : state) benchmark::DoNotOptimize(solve_intertwiner(f, f2, OFElement::one(F, need), M, N));
}
BENCHMARK(BM_Intertwiner)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_Det(benchmark::State& state) {
  auto F = Field::rational(5);
  const int d = static_cast<int>(state.range(0));
  SeriesMatrix a = SeriesMatrix::identity(F, d, 20, 30);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = a(i, j) + USeries::from_integers(F, {i + 1L, j + 2L, 1}, 20, 30);
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Det)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
