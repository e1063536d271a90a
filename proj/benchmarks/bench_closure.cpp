// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "isotensor/basis.hpp"
#include "isotensor/closure.hpp"
#include "isotensor/rng.hpp"

namespace {

using namespace isotensor;

// The first touch of either basis runs the one-time exact derivation; warm
// them so the loops below measure steady-state evaluation.
void warm_bases() {
  RepresentationBasis::standard();
  ContractedBasis::standard();
}

void BM_EvaluateRepresentation(benchmark::State& state) {
  warm_bases();
  SplitMix64 rng(3);
  const RepresentationModel model = RepresentationModel::random(rng);
  const DenseTensor T = random_symmetric(rng);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_representation(model, T));
}
BENCHMARK(BM_EvaluateRepresentation);

void BM_EvaluateClosure(benchmark::State& state) {
  warm_bases();
  SplitMix64 rng(5);
  ClosureCoefficients a = ClosureCoefficients::zero();
  for (auto& c : a.a) c = random_rational(rng);
  const ReynoldsStress T = ReynoldsStress::from_tensor(random_symmetric(rng));
  const VelocityGradient U = VelocityGradient::from_tensor(random_tracefree_matrix(rng));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_closure(a, T, U));
}
BENCHMARK(BM_EvaluateClosure);

void BM_DualPathCheck(benchmark::State& state) {
  warm_bases();
  SplitMix64 rng(7);
  const RepresentationModel model = RepresentationModel::random(rng);
  const DenseTensor T = random_symmetric(rng);
  const DenseTensor U = random_tracefree_matrix(rng);
  for (auto _ : state) benchmark::DoNotOptimize(dual_path_check(model, T, U));
}
BENCHMARK(BM_DualPathCheck);

}  // namespace
