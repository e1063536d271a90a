// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isotensor/tensor.hpp"

namespace isotensor {

/// One outer product of Kronecker deltas, encoded as a perfect matching of
/// the index slots: order 2n slots partitioned into n unordered pairs.
/// Canonical form stores each pair as (lo, hi) with the pairs sorted by lo.
///
/// Slot labels are fixed repo-wide: slots 0..7 correspond to subscripts
/// i, j, k, l, m, n, p, q, and the first four slots are always the free
/// slots of a fourth-order result.
struct DeltaIsomer {
  int order = 0;
  std::vector<std::pair<int, int>> pairs;

  /// Validates the perfect-matching invariant and canonicalizes.
  static DeltaIsomer from_pairs(int order, std::vector<std::pair<int, int>> pairs);

  /// Subscript rendering with the repo slot letters, e.g. "d(i,k) d(j,l) d(m,n)".
  std::string subscript_string() const;

  friend bool operator==(const DeltaIsomer&, const DeltaIsomer&) = default;
  friend auto operator<=>(const DeltaIsomer& a, const DeltaIsomer& b) {
    return a.pairs <=> b.pairs;
  }
};

/// All distinct isomers of one order, in canonical enumeration order
/// (lexicographic on the canonical pair lists). The sequence index is the
/// contract other modules use to address per-isomer coefficients.
struct IsomerSet {
  int order = 0;
  std::vector<DeltaIsomer> isomers;

  std::size_t count() const { return isomers.size(); }
  std::optional<std::size_t> index_of(const DeltaIsomer& iso) const;
};

/// Enumerates every perfect matching of `order` slots (order even, 2..10).
/// Counts follow the double factorial: 1, 3, 15, 105, 945 for orders
/// 2, 4, 6, 8, 10.
IsomerSet enumerate_isomers(int order);

/// Componentwise evaluation: 1 where the index agrees within every pair,
/// else 0.
DenseTensor evaluate_isomer(const DeltaIsomer& iso, int dim);

/// Contracts the trailing 2k slots of the evaluated isomer against k order-2
/// argument tensors, leaving the leading slots free. For a fourth-order
/// result, iso.order == 4 + 2k. Equivalent to (but much cheaper than)
/// contract(outer(evaluate_isomer(iso, d), args...), trailing pairs).
DenseTensor apply_isomer(const DeltaIsomer& iso, std::span<const DenseTensor> args);
DenseTensor apply_isomer(const DeltaIsomer& iso, std::initializer_list<DenseTensor> args);

}  // namespace isotensor
