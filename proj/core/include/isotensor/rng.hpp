// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "isotensor/tensor.hpp"

namespace isotensor {

/// SplitMix64 generator. Hand-rolled so that seeded runs are byte-identical
/// on every platform; the standard distributions make no such promise.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; the slight modulo bias is irrelevant
  /// for identity-testing samples and keeps the stream trivially portable.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Random integer-entry rational, numerator in [-9, 9], denominator in [1, 9].
Rational random_rational(SplitMix64& rng);

/// Symmetric matrix with independent integer entries in [-9, 9] on and above
/// the diagonal, mirrored below.
DenseTensor random_symmetric(SplitMix64& rng, int dim = 3);

/// Symmetric with exact zero trace: off-diagonal and all but the last
/// diagonal entry drawn in [-9, 9], last diagonal entry balancing the trace.
DenseTensor random_tracefree_symmetric(SplitMix64& rng, int dim = 3);

/// General matrix with integer entries in [-9, 9] and the last diagonal
/// entry chosen so the trace is exactly zero (an incompressible velocity
/// gradient sample).
DenseTensor random_tracefree_matrix(SplitMix64& rng, int dim = 3);

inline Rational random_rational(SplitMix64& rng) {
  return Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
}

inline DenseTensor random_symmetric(SplitMix64& rng, int dim) {
  DenseTensor t(dim, 2);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const Rational v(rng.uniform_int(-9, 9));
      t.at({i, j}) = v;
      t.at({j, i}) = v;
    }
  return t;
}

inline DenseTensor random_tracefree_symmetric(SplitMix64& rng, int dim) {
  DenseTensor t = random_symmetric(rng, dim);
  Rational partial;
  for (int i = 0; i + 1 < dim; ++i) partial += t.at({i, i});
  t.at({dim - 1, dim - 1}) = -partial;
  return t;
}

inline DenseTensor random_tracefree_matrix(SplitMix64& rng, int dim) {
  DenseTensor t(dim, 2);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t.at({i, j}) = Rational(rng.uniform_int(-9, 9));
  Rational partial;
  for (int i = 0; i + 1 < dim; ++i) partial += t.at({i, i});
  t.at({dim - 1, dim - 1}) = -partial;
  return t;
}

}  // namespace isotensor
