#include <benchmark/benchmark.h>

#include "spp/combinat/enumerate.hpp"
#include "spp/exactalg/determinant.hpp"
#include "spp/exactalg/division.hpp"
#include "spp/schur/schur.hpp"

using namespace spp;
using exactalg::LaurentPoly;
using exactalg::Var;

namespace {

LaurentPoly linear_sum(int n) {
  LaurentPoly p = 1;
  for (int i = 1; i <= n; ++i) p += LaurentPoly::var(Var::x(i));
  return p;
}

void BM_PolyMul(benchmark::State& state) {
  const auto a = linear_sum(4).pow(static_cast<int>(state.range(0)));
  const auto b = linear_sum(4).pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.counters["terms"] = static_cast<double>(a.size());
}
BENCHMARK(BM_PolyMul)->DenseRange(2, 6, 2);

void BM_ExactDiv(benchmark::State& state) {
  const auto b = linear_sum(3).pow(3);
  const auto a = linear_sum(3).pow(static_cast<int>(state.range(0))) * b;
  for (auto _ : state) benchmark::DoNotOptimize(exactalg::exact_div(a, b));
}
BENCHMARK(BM_ExactDiv)->DenseRange(2, 6, 2);

void BM_Determinant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = exactalg::PolyMatrix::generate(n, [n](int i, int j) {
    return LaurentPoly::var(Var::x(i), j - 1) - LaurentPoly::var(Var::x(i), 2 * n - j);
  });
  for (auto _ : state) benchmark::DoNotOptimize(exactalg::determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 5);

void BM_BoxDetRatio(benchmark::State& state) {
  const schur::BoxParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(schur::box_det_ratio(p));
}
BENCHMARK(BM_BoxDetRatio)->Args({2, 2})->Args({3, 3})->Args({4, 4});

void BM_SchurBoxSum(benchmark::State& state) {
  const schur::BoxParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(schur::schur_box_sum(p));
}
BENCHMARK(BM_SchurBoxSum)->Args({2, 2})->Args({3, 3})->Args({4, 4});

void BM_SymmetricEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::int64_t count = 0;
  for (auto _ : state) {
    count = 0;
    combinat::symmetric_plane_partitions(n, n, [&](const combinat::PlanePartition&) { ++count; });
  }
  state.counters["objects"] = static_cast<double>(count);
}
BENCHMARK(BM_SymmetricEnumeration)->DenseRange(2, 4);

}  // namespace
BENCHMARK_MAIN();
