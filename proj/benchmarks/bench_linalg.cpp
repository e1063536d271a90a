// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "isotensor/isomer.hpp"
#include "isotensor/rational_matrix.hpp"

namespace {

using namespace isotensor;

RationalMatrix isomer_component_matrix(int order, int dim) {
  RationalMatrix m;
  for (const auto& iso : enumerate_isomers(order).isomers)
    m.append_row(evaluate_isomer(iso, dim).entries());
  return m;
}

void BM_RankIsomerMatrix(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const RationalMatrix m = isomer_component_matrix(order, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
// order 8 is the certification kernel of the repo (105 x 6561, rank 91)
BENCHMARK(BM_RankIsomerMatrix)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankIsomerMatrix)->Arg(8)->Unit(benchmark::kSecond)->Iterations(1);

void BM_NullspaceIsomerMatrix(benchmark::State& state) {
  const RationalMatrix m = isomer_component_matrix(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_NullspaceIsomerMatrix)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
