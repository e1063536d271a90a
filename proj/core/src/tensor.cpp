// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace isotensor {

namespace {

constexpr int kMaxDim = 4;
constexpr int kMaxOrder = 10;

std::size_t checked_size(int dim, int order) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("DenseTensor: dimension must be in [1, 4], got " + std::to_string(dim));
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("DenseTensor: order must be in [0, 10], got " + std::to_string(order));
  std::size_t n = 1;
  for (int i = 0; i < order; ++i) n *= static_cast<std::size_t>(dim);
  return n;
}

}  // namespace

// Order-0 tensors are plain scalars; normalizing their dimension to 1 keeps
// equality independent of which contraction produced them.
DenseTensor::DenseTensor(int dim, int order)
    : dim_(order == 0 ? 1 : dim), order_(order), entries_(checked_size(dim, order)) {}

DenseTensor DenseTensor::scalar(Rational value) {
  DenseTensor t(1, 0);
  t.entries_[0] = std::move(value);
  return t;
}

DenseTensor DenseTensor::identity(int dim) {
  DenseTensor t(dim, 2);
  for (int i = 0; i < dim; ++i) t.at({i, i}) = 1;
  return t;
}

DenseTensor DenseTensor::diagonal(std::vector<Rational> diag) {
  DenseTensor t(static_cast<int>(diag.size()), 2);
  for (int i = 0; i < t.dim_; ++i) t.at({i, i}) = std::move(diag[static_cast<std::size_t>(i)]);
  return t;
}

DenseTensor DenseTensor::from_matrix(const std::vector<std::vector<Rational>>& rows) {
  const int d = static_cast<int>(rows.size());
  DenseTensor t(d, 2);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != d)
      throw std::invalid_argument("from_matrix: ragged rows");
    for (int j = 0; j < d; ++j) t.at({i, j}) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return t;
}

std::size_t DenseTensor::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order_)
    throw std::invalid_argument("flat_index: index length does not match tensor order");
  std::size_t f = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw std::out_of_range("flat_index: component out of range");
    f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
  }
  return f;
}

MultiIndex DenseTensor::unflatten(std::size_t flat) const {
  MultiIndex idx(static_cast<std::size_t>(order_));
  for (int s = order_ - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
    flat /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

bool DenseTensor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& o) {
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("tensor addition: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& o) {
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("tensor subtraction: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

DenseTensor outer(const DenseTensor& a, const DenseTensor& b) {
  if (a.dim() != b.dim() && a.order() != 0 && b.order() != 0)
    throw std::invalid_argument("outer: dimension mismatch");
  const int dim = a.order() == 0 ? b.dim() : a.dim();
  DenseTensor r(dim, a.order() + b.order());
  const std::size_t nb = b.size();
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    if (a[ia].is_zero()) continue;
    for (std::size_t ib = 0; ib < nb; ++ib) r[ia * nb + ib] = a[ia] * b[ib];
  }
  return r;
}

DenseTensor contract(const DenseTensor& a, std::span<const std::pair<int, int>> slot_pairs) {
  const int order = a.order();
  std::vector<bool> used(static_cast<std::size_t>(order), false);
  for (auto [p, q] : slot_pairs) {
    for (int s : {p, q}) {
      if (s < 0 || s >= order) throw std::invalid_argument("contract: slot out of range");
      if (used[static_cast<std::size_t>(s)]) throw std::invalid_argument("contract: slot reused");
      used[static_cast<std::size_t>(s)] = true;
    }
  }
  std::vector<int> free_slots;
  for (int s = 0; s < order; ++s)
    if (!used[static_cast<std::size_t>(s)]) free_slots.push_back(s);

  const int dim = a.dim();
  const std::size_t npairs = slot_pairs.size();
  DenseTensor r(dim, static_cast<int>(free_slots.size()));

  std::size_t sum_count = 1;
  for (std::size_t i = 0; i < npairs; ++i) sum_count *= static_cast<std::size_t>(dim);

  MultiIndex full(static_cast<std::size_t>(order));
  for (std::size_t rf = 0; rf < r.size(); ++rf) {
    const MultiIndex free_idx = r.unflatten(rf);
    for (std::size_t t = 0; t < free_slots.size(); ++t)
      full[static_cast<std::size_t>(free_slots[t])] = free_idx[t];
    Rational sum;
    for (std::size_t assign = 0; assign < sum_count; ++assign) {
      std::size_t rest = assign;
      for (auto [p, q] : slot_pairs) {
        const int v = static_cast<int>(rest % static_cast<std::size_t>(dim));
        rest /= static_cast<std::size_t>(dim);
        full[static_cast<std::size_t>(p)] = v;
        full[static_cast<std::size_t>(q)] = v;
      }
      sum += a.at(full);
    }
    r[rf] = std::move(sum);
  }
  return r;
}

DenseTensor contract(const DenseTensor& a, std::initializer_list<std::pair<int, int>> slot_pairs) {
  return contract(a, std::span<const std::pair<int, int>>(slot_pairs.begin(), slot_pairs.size()));
}

DenseTensor permute(const DenseTensor& a, std::span<const int> perm) {
  const int order = a.order();
  if (static_cast<int>(perm.size()) != order)
    throw std::invalid_argument("permute: permutation length does not match order");
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (int p : perm) {
    if (p < 0 || p >= order || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("permute: not a permutation of the slots");
    seen[static_cast<std::size_t>(p)] = true;
  }
  DenseTensor r(a.dim(), order);
  MultiIndex dst(static_cast<std::size_t>(order));
  for (std::size_t f = 0; f < a.size(); ++f) {
    const MultiIndex src = a.unflatten(f);
    for (int j = 0; j < order; ++j)
      dst[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = src[static_cast<std::size_t>(j)];
    r.at(dst) = a[f];
  }
  return r;
}

DenseTensor permute(const DenseTensor& a, std::initializer_list<int> perm) {
  return permute(a, std::span<const int>(perm.begin(), perm.size()));
}

DenseTensor symmetrize_pair(const DenseTensor& a, std::pair<int, int> slots) {
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
  std::swap(perm[static_cast<std::size_t>(slots.first)], perm[static_cast<std::size_t>(slots.second)]);
  return a + permute(a, perm);
}

TraceInvariants trace_invariants(const DenseTensor& t) {
  if (t.order() != 2) throw std::invalid_argument("trace_invariants: order-2 tensor required");
  TraceInvariants inv;
  for (int i = 0; i < t.dim(); ++i) {
    inv.trT += t.at({i, i});
    for (int j = 0; j < t.dim(); ++j) inv.trT2 += t.at({i, j}) * t.at({j, i});
  }
  inv.trT_squared = inv.trT * inv.trT;
  return inv;
}

DenseTensor transpose(const DenseTensor& m) {
  if (m.order() != 2) throw std::invalid_argument("transpose: order-2 tensor required");
  return permute(m, {1, 0});
}

DenseTensor matmul(const DenseTensor& a, const DenseTensor& b) {
  if (a.order() != 2 || b.order() != 2 || a.dim() != b.dim())
    throw std::invalid_argument("matmul: two order-2 tensors of equal dimension required");
  DenseTensor r(a.dim(), 2);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      Rational s;
      for (int k = 0; k < a.dim(); ++k) s += a.at({i, k}) * b.at({k, j});
      r.at({i, j}) = std::move(s);
    }
  return r;
}

Rational trace(const DenseTensor& m) {
  if (m.order() != 2) throw std::invalid_argument("trace: order-2 tensor required");
  Rational s;
  for (int i = 0; i < m.dim(); ++i) s += m.at({i, i});
  return s;
}

bool is_symmetric(const DenseTensor& m) {
  if (m.order() != 2) return false;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j)
      if (m.at({i, j}) != m.at({j, i})) return false;
  return true;
}

bool is_antisymmetric(const DenseTensor& m) {
  if (m.order() != 2) return false;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      if (m.at({i, j}) != -m.at({j, i})) return false;
  return true;
}

}  // namespace isotensor
