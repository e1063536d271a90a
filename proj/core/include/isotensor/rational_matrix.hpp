// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "isotensor/rational.hpp"

namespace isotensor {

/// Exact-rational dense matrix, row-major. The certification workhorse:
/// rank, nullspace, and linear solves are all exact, deterministic, and
/// backed by fraction-free (Bareiss) elimination over arbitrary-precision
/// integers so intermediate growth stays polynomial.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }

  /// Appends one row; the matrix must be empty or have matching width.
  void append_row(std::span<const Rational> row);

  RationalMatrix transposed() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Exact rank over the rationals.
std::size_t rank(const RationalMatrix& m);

/// Basis of the left nullspace: all c with sum_k c_k * row_k = 0. Each basis
/// vector is scaled to integer entries with gcd 1 and a positive leading
/// entry, and the basis order is fixed by the elimination pivot order, so
/// results are byte-stable across runs.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Least structure that distinguishes "no solution" from a coefficient
/// vector; NOT_IN_SPAN is an ordinary result, not an error.
struct SpanSolve {
  bool in_span = false;
  std::vector<Rational> coeffs;  // c with c * basis_rows = target (free coords zeroed)
};

/// Expresses target as a linear combination of the rows of basis_rows.
/// When the rows are independent the coefficients are unique.
SpanSolve solve_in_span(std::span<const Rational> target, const RationalMatrix& basis_rows);

}  // namespace isotensor
