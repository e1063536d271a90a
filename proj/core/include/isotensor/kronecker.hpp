// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "isotensor/isomer.hpp"
#include "isotensor/rational.hpp"
#include "isotensor/tensor.hpp"

namespace isotensor {

/// A k x k determinant of Kronecker deltas: rows are labelled by the upper
/// slots, columns by the lower slots, and entry (a, b) is
/// delta(upper[a], lower[b]). Expanding the determinant by signed
/// permutations gives an order-2k tensor that vanishes identically whenever
/// k exceeds the spatial dimension.
struct GenKroneckerSpec {
  int size = 0;             // k
  std::vector<int> upper;   // k slot labels
  std::vector<int> lower;   // k slot labels, disjoint from upper

  /// Validates 2 <= k <= 4 and that upper+lower partition [0, 2k).
  static GenKroneckerSpec make(std::vector<int> upper, std::vector<int> lower);

  /// k = 4 with rows (i, k, m, p) = slots {0,2,4,6} and columns
  /// (j, l, n, q) = slots {1,3,5,7}. Contracting slots 4..7 with T (x) T gives
  /// the quadratic combination whose free deltas pair (i,j), (k,l), (i,l), (j,k).
  static GenKroneckerSpec alternating();

  /// k = 4 with rows (i, j, m, p) = slots {0,1,4,6} and columns
  /// (k, l, n, q) = slots {2,3,5,7}; the free deltas pair (i,k), (j,l), (i,l), (j,k).
  static GenKroneckerSpec front_paired();
};

/// Expands the determinant componentwise. Dimension-generic: for k = dim+1
/// the result is identically zero (two rows always coincide).
DenseTensor gen_kronecker(const GenKroneckerSpec& spec, int dim);

/// The determinant as a signed sum of k! isomers: coefficients over the
/// canonical IsomerSet of order 2k (set.order must equal 2*spec.size).
std::vector<Rational> expand_as_isomer_combination(const GenKroneckerSpec& spec,
                                                   const IsomerSet& set);

/// Contracts a k=4 determinant tensor with T (x) T over slots (4,5) and
/// (6,7). Requires symmetric T with dim == 3, where the result is
/// identically zero.
DenseTensor contract_with_TT(const GenKroneckerSpec& spec, const DenseTensor& T);

/// Which of the two quadratic contraction identities a grouped expansion
/// refers to; see GenKroneckerSpec::alternating() / front_paired().
enum class QuadIdentity { AlternatingSlots, FrontPairedSlots };

/// The grouped closed form of the contraction, built verbatim from matrix
/// products and trace invariants (dimension-generic). Equals
/// contract_with_TT as a polynomial identity in the entries of T; in three
/// dimensions both are identically zero.
DenseTensor grouped_expansion(QuadIdentity which, const DenseTensor& T);

/// grouped_expansion minus the determinant contraction; the exact zero
/// tensor when the grouping algebra is right. Requires symmetric T, dim 3.
DenseTensor verify_grouped_expansion(QuadIdentity which, const DenseTensor& T);

}  // namespace isotensor
