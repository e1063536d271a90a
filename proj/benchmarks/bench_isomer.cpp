// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "isotensor/isomer.hpp"
#include "isotensor/rng.hpp"

namespace {

using namespace isotensor;

void BM_EnumerateIsomers(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_isomers(order));
}
BENCHMARK(BM_EnumerateIsomers)->Arg(6)->Arg(8)->Arg(10);

void BM_EvaluateIsomerOrder8(benchmark::State& state) {
  const IsomerSet set = enumerate_isomers(8);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_isomer(set.isomers[i], 3));
    i = (i + 1) % set.count();
  }
}
BENCHMARK(BM_EvaluateIsomerOrder8);

void BM_ApplyIsomerTT(benchmark::State& state) {
  const IsomerSet set = enumerate_isomers(8);
  SplitMix64 rng(1);
  const DenseTensor T = random_symmetric(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_isomer(set.isomers[i], {T, T}));
    i = (i + 1) % set.count();
  }
}
BENCHMARK(BM_ApplyIsomerTT);

}  // namespace
