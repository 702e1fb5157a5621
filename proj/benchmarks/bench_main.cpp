#include <benchmark/benchmark.h>

#include "superds/charformulas.hpp"
#include "superds/linalg.hpp"
#include "superds/vacuum.hpp"

using namespace superds;

static void BM_ds_reduce(benchmark::State& st) {
  auto d = parse_algebra("B(3|5)");
  auto S = maximal_isotropic_set(d);
  for (auto _ : st) benchmark::DoNotOptimize(ds_reduce(d, S));
}
BENCHMARK(BM_ds_reduce);

static void BM_weyl_denominator(benchmark::State& st) {
  auto d = parse_algebra("B(1|2)");
  auto aff = level_base(d);
  const int depth = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(weyl_denominator(d, aff, Window{depth, 2 * depth + 2}));
}
BENCHMARK(BM_weyl_denominator)->Arg(2)->Arg(4)->Arg(6);

static void BM_series_inverse(benchmark::State& st) {
  auto d = parse_algebra("C2");
  auto aff = level_base(d);
  auto R = weyl_denominator(d, aff, Window{static_cast<int>(st.range(0)), 12});
  for (auto _ : st) benchmark::DoNotOptimize(inverse(R));
}
BENCHMARK(BM_series_inverse)->Arg(2)->Arg(4);

static void BM_weyl_kac(benchmark::State& st) {
  auto d = parse_algebra("A2");
  auto aff = level_base(d);
  for (auto _ : st) benchmark::DoNotOptimize(weyl_kac_char(d, aff, 1, Window{static_cast<int>(st.range(0)), 16}));
}
BENCHMARK(BM_weyl_kac)->Arg(2)->Arg(4);

static void BM_bareiss_rank(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5, static_cast<long>(1 + (i + j) % 3));
  for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_bareiss_rank)->Arg(16)->Arg(48)->Arg(96);

static void BM_oracle_simple(benchmark::State& st) {
  auto d = parse_algebra("A(1|0)");
  auto A = build_structured(d);
  for (auto _ : st) {
    GradedModule M(A, 1, static_cast<int>(st.range(0)));
    benchmark::DoNotOptimize(simple_table(M));
  }
}
BENCHMARK(BM_oracle_simple)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
