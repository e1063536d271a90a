// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "isotensor/rational.hpp"

namespace isotensor {

/// Index tuple addressing one tensor component; length equals the order of
/// the tensor it addresses, each value in [0, dim).
using MultiIndex = std::vector<int>;

/// Dense tensor of arbitrary order over exact rationals. Components are a
/// flat row-major sequence (last index varies fastest) of length dim^order.
/// Values are immutable in practice: every operation returns a new tensor.
///
/// Dimension is capped at 4 and order at 10; beyond that the component count
/// explodes and nothing in this library needs it.
class DenseTensor {
 public:
  DenseTensor() : dim_(1), order_(0), entries_(1) {}
  DenseTensor(int dim, int order);

  static DenseTensor scalar(Rational value);
  /// Order-2 Kronecker delta.
  static DenseTensor identity(int dim);
  static DenseTensor diagonal(std::vector<Rational> diag);
  static DenseTensor from_matrix(const std::vector<std::vector<Rational>>& rows);

  int dim() const { return dim_; }
  int order() const { return order_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Rational> entries() const { return entries_; }

  const Rational& operator[](std::size_t flat) const { return entries_[flat]; }
  Rational& operator[](std::size_t flat) { return entries_[flat]; }

  const Rational& at(std::span<const int> idx) const { return entries_[flat_index(idx)]; }
  Rational& at(std::span<const int> idx) { return entries_[flat_index(idx)]; }
  const Rational& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  Rational& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  std::size_t flat_index(std::span<const int> idx) const;
  MultiIndex unflatten(std::size_t flat) const;

  bool is_zero() const;

  DenseTensor& operator+=(const DenseTensor& o);
  DenseTensor& operator-=(const DenseTensor& o);
  DenseTensor& operator*=(const Rational& s);

  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(DenseTensor a, const Rational& s) { return a *= s; }
  friend DenseTensor operator*(const Rational& s, DenseTensor a) { return a *= s; }
  friend DenseTensor operator-(const DenseTensor& a) { return a * Rational(-1); }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  int dim_;
  int order_;
  std::vector<Rational> entries_;
};

/// Outer product: result order is the sum of the operand orders and
/// result[(i,j)] = a[i] * b[j]. Requires matching dimension.
DenseTensor outer(const DenseTensor& a, const DenseTensor& b);

/// Einstein summation over the given slot pairs. Slots must be distinct and
/// in range; each pair lowers the order by two. The surviving slots keep
/// their relative order. The result does not depend on the pair ordering.
DenseTensor contract(const DenseTensor& a, std::span<const std::pair<int, int>> slot_pairs);
DenseTensor contract(const DenseTensor& a, std::initializer_list<std::pair<int, int>> slot_pairs);

/// Slot permutation: the value held at slot tuple idx moves to the tuple
/// with idx[j] at position perm[j], i.e. result[perm(idx)] = a[idx].
/// Composes as permute(permute(a, s), t) == permute(a, t∘s).
DenseTensor permute(const DenseTensor& a, std::span<const int> perm);
DenseTensor permute(const DenseTensor& a, std::initializer_list<int> perm);

/// a + (a with the two slots swapped). Deliberately not halved; callers own
/// the scaling.
DenseTensor symmetrize_pair(const DenseTensor& a, std::pair<int, int> slots);

struct TraceInvariants {
  Rational trT;         // tr T
  Rational trT2;        // tr T²
  Rational trT_squared; // (tr T)²
};

/// The scalar invariants of an order-2 tensor used throughout the basis
/// construction. Exact.
TraceInvariants trace_invariants(const DenseTensor& t);

// Order-2 (matrix) conveniences.
DenseTensor transpose(const DenseTensor& m);
DenseTensor matmul(const DenseTensor& a, const DenseTensor& b);
Rational trace(const DenseTensor& m);
bool is_symmetric(const DenseTensor& m);
bool is_antisymmetric(const DenseTensor& m);

}  // namespace isotensor
