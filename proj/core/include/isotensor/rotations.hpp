// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "isotensor/tensor.hpp"

namespace isotensor {

/// The 24 proper rotations with entries in {-1, 0, 1}: signed permutation
/// matrices of determinant +1. Exact-rational orthogonal samples for frame
/// and isotropy checks; deterministic order.
std::vector<DenseTensor> proper_signed_permutations();

/// Applies Q to every slot of t: out_{i1..ir} = Q_{i1 a1} ... Q_{ir ar} t_{a1..ar}.
DenseTensor rotate_tensor(const DenseTensor& Q, const DenseTensor& t);

}  // namespace isotensor
