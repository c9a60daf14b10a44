// Copyright 2026 the zetax authors
// SPDX-License-Identifier: Apache-2.0

#include "zetax/repulsion.hpp"
#include "zetax/zerodata.hpp"

#include <benchmark/benchmark.h>

namespace {

const zetax::ToleranceConfig cfg{};

void BM_zeta_real(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zetax::zeta_real(1.5, cfg));
}
BENCHMARK(BM_zeta_real);

void BM_digamma(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zetax::digamma({0.5, 0.5}, cfg));
}
BENCHMARK(BM_digamma);

void BM_count_window(benchmark::State& state) {
  zetax::FieldParams q{1, 1, 0, 0.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(zetax::count_window(q, 100.0, 0.25, cfg));
}
BENCHMARK(BM_count_window);

void BM_laplace_eval(benchmark::State& state) {
  auto [hp, pair] = zetax::hb_pair(0.543, cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(zetax::laplace_eval(pair, {1.0, 1.0}, cfg));
}
BENCHMARK(BM_laplace_eval);

void BM_solve_lambda_prime(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(zetax::solve_lambda_prime(0.01, 0.477, cfg));
}
BENCHMARK(BM_solve_lambda_prime);

}  // namespace

BENCHMARK_MAIN();
