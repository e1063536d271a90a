// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/rational_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace isotensor {

namespace {

// Integer working matrix for fraction-free elimination.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
  }
};

struct Echelon {
  IntMatrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // one per pivot, ascending
  std::vector<std::size_t> pivot_rows;  // row holding each pivot (== 0..rank-1 after swaps)
};

// One-step Bareiss (fraction-free) row reduction. Pivots are chosen in the
// leftmost nonzero column among columns [0, pivot_col_limit), smallest row
// index first, which makes every downstream result deterministic. Updates
// span the full width, so augmented columns ride along correctly.
Echelon bareiss_echelon(IntMatrix m, std::size_t pivot_col_limit) {
  Echelon e{std::move(m), 0, {}, {}};
  IntMatrix& w = e.m;
  mpz_class prev(1), acc;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_col_limit && r < w.rows; ++col) {
    std::size_t pivot_row = r;
    while (pivot_row < w.rows && sgn(w.at(pivot_row, col)) == 0) ++pivot_row;
    if (pivot_row == w.rows) continue;
    w.swap_rows(r, pivot_row);
    const mpz_class& p = w.at(r, col);
    for (std::size_t i = r + 1; i < w.rows; ++i) {
      const mpz_class mik = w.at(i, col);  // copy: the update overwrites it
      for (std::size_t j = col + 1; j < w.cols; ++j) {
        mpz_mul(acc.get_mpz_t(), p.get_mpz_t(), w.at(i, j).get_mpz_t());
        if (sgn(mik) != 0)
          mpz_submul(acc.get_mpz_t(), mik.get_mpz_t(), w.at(r, j).get_mpz_t());
#ifndef NDEBUG
        if (!mpz_divisible_p(acc.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("bareiss: inexact division (elimination invariant broken)");
#endif
        mpz_divexact(w.at(i, j).get_mpz_t(), acc.get_mpz_t(), prev.get_mpz_t());
      }
      w.at(i, col) = 0;
    }
    prev = p;
    e.pivot_cols.push_back(col);
    e.pivot_rows.push_back(r);
    ++r;
  }
  e.rank = r;
  return e;
}

// Clears denominators row by row; scales[r] is the positive integer the row
// was multiplied by.
IntMatrix to_integer_rows(const RationalMatrix& m, std::vector<mpz_class>& scales) {
  IntMatrix z(m.rows(), m.cols());
  scales.assign(m.rows(), mpz_class(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l(1);
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).den().get_mpz_t());
    scales[r] = l;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m.at(r, c);
      z.at(r, c) = q.num() * (l / q.den());
    }
  }
  return z;
}

// Scales an integer vector to gcd 1 with a positive leading entry.
void normalize_integer_vector(std::vector<mpz_class>& v) {
  mpz_class g(0);
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(g) == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> row) {
  if (rows_ == 0) {
    cols_ = row.size();
  } else if (row.size() != cols_) {
    throw std::invalid_argument("append_row: width mismatch");
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<mpz_class> scales;
  IntMatrix z = to_integer_rows(m, scales);
  return bareiss_echelon(std::move(z), m.cols()).rank;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return {};
  std::vector<mpz_class> scales;
  IntMatrix z = to_integer_rows(m, scales);

  // Augment with the identity; rows whose matrix part eliminates to zero
  // carry the combination that produced them.
  IntMatrix aug(n, m.cols() + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = std::move(z.at(r, c));
    aug.at(r, m.cols() + r) = 1;
  }
  Echelon e = bareiss_echelon(std::move(aug), m.cols());

  std::vector<std::vector<Rational>> basis;
  for (std::size_t r = e.rank; r < n; ++r) {
    std::vector<mpz_class> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = e.m.at(r, m.cols() + k);
    // Undo the row prescaling: the combination applies to the scaled rows.
    for (std::size_t k = 0; k < n; ++k) v[k] *= scales[k];
    normalize_integer_vector(v);
    std::vector<Rational> rv(n);
    for (std::size_t k = 0; k < n; ++k) rv[k] = Rational(std::move(v[k]));
    basis.push_back(std::move(rv));
  }
  return basis;
}

SpanSolve solve_in_span(std::span<const Rational> target, const RationalMatrix& basis_rows) {
  const std::size_t k = basis_rows.rows();
  const std::size_t n = basis_rows.cols();
  if (target.size() != n)
    throw std::invalid_argument("solve_in_span: target length does not match basis width");

  if (k == 0) {
    const bool zero = std::all_of(target.begin(), target.end(),
                                  [](const Rational& q) { return q.is_zero(); });
    return SpanSolve{zero, {}};
  }

  // Solve transpose(B) x = t over the integers after clearing denominators.
  std::vector<mpz_class> row_scales;
  IntMatrix zb = to_integer_rows(basis_rows, row_scales);
  mpz_class target_scale(1);
  for (const Rational& q : target)
    mpz_lcm(target_scale.get_mpz_t(), target_scale.get_mpz_t(), q.den().get_mpz_t());

  IntMatrix sys(n, k + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) sys.at(r, c) = zb.at(c, r);
    sys.at(r, k) = target[r].num() * (target_scale / target[r].den());
  }
  Echelon e = bareiss_echelon(std::move(sys), k);

  for (std::size_t r = e.rank; r < n; ++r)
    if (sgn(e.m.at(r, k)) != 0) return SpanSolve{false, {}};

  // Back substitution; non-pivot unknowns stay zero, which keeps the result
  // deterministic when the basis rows are dependent.
  std::vector<Rational> x(k);
  for (std::size_t t = e.rank; t-- > 0;) {
    const std::size_t pr = e.pivot_rows[t];
    const std::size_t pc = e.pivot_cols[t];
    Rational rhs = Rational(e.m.at(pr, k));
    for (std::size_t j = pc + 1; j < k; ++j)
      rhs -= Rational(e.m.at(pr, j)) * x[j];
    x[pc] = rhs / Rational(e.m.at(pr, pc));
  }

  // Undo both scalings: x solves the scaled system.
  std::vector<Rational> coeffs(k);
  for (std::size_t c = 0; c < k; ++c)
    coeffs[c] = x[c] * Rational(row_scales[c]) / Rational(target_scale);
  return SpanSolve{true, std::move(coeffs)};
}

}  // namespace isotensor
