// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/isomer.hpp"

#include <algorithm>
#include <stdexcept>

namespace isotensor {

namespace {

constexpr char kSlotLetters[] = {'i', 'j', 'k', 'l', 'm', 'n', 'p', 'q', 'r', 's'};

void enumerate_rec(std::vector<bool>& matched, std::vector<std::pair<int, int>>& current,
                   std::vector<DeltaIsomer>& out, int order) {
  int lo = -1;
  for (int s = 0; s < order; ++s)
    if (!matched[static_cast<std::size_t>(s)]) {
      lo = s;
      break;
    }
  if (lo < 0) {
    out.push_back(DeltaIsomer{order, current});
    return;
  }
  matched[static_cast<std::size_t>(lo)] = true;
  for (int hi = lo + 1; hi < order; ++hi) {
    if (matched[static_cast<std::size_t>(hi)]) continue;
    matched[static_cast<std::size_t>(hi)] = true;
    current.emplace_back(lo, hi);
    enumerate_rec(matched, current, out, order);
    current.pop_back();
    matched[static_cast<std::size_t>(hi)] = false;
  }
  matched[static_cast<std::size_t>(lo)] = false;
}

}  // namespace

DeltaIsomer DeltaIsomer::from_pairs(int order, std::vector<std::pair<int, int>> pairs) {
  if (order <= 0 || order % 2 != 0)
    throw std::invalid_argument("DeltaIsomer: order must be a positive even integer");
  if (static_cast<int>(pairs.size()) * 2 != order)
    throw std::invalid_argument("DeltaIsomer: pair count must be order/2");
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    for (int s : {a, b}) {
      if (s < 0 || s >= order) throw std::invalid_argument("DeltaIsomer: slot out of range");
      if (seen[static_cast<std::size_t>(s)])
        throw std::invalid_argument("DeltaIsomer: slot appears twice");
      seen[static_cast<std::size_t>(s)] = true;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return DeltaIsomer{order, std::move(pairs)};
}

std::string DeltaIsomer::subscript_string() const {
  std::string s;
  for (auto [a, b] : pairs) {
    if (!s.empty()) s += ' ';
    s += "d(";
    s += kSlotLetters[a];
    s += ',';
    s += kSlotLetters[b];
    s += ')';
  }
  return s;
}

std::optional<std::size_t> IsomerSet::index_of(const DeltaIsomer& iso) const {
  auto it = std::lower_bound(isomers.begin(), isomers.end(), iso,
                             [](const DeltaIsomer& a, const DeltaIsomer& b) { return a.pairs < b.pairs; });
  if (it == isomers.end() || !(*it == iso)) return std::nullopt;
  return static_cast<std::size_t>(it - isomers.begin());
}

IsomerSet enumerate_isomers(int order) {
  if (order < 2 || order > 10 || order % 2 != 0)
    throw std::invalid_argument("enumerate_isomers: order must be even and in [2, 10]");
  IsomerSet set;
  set.order = order;
  std::vector<bool> matched(static_cast<std::size_t>(order), false);
  std::vector<std::pair<int, int>> current;
  // Pairing the smallest unmatched slot with each larger slot in turn yields
  // the lexicographically sorted canonical enumeration directly.
  enumerate_rec(matched, current, set.isomers, order);
  return set;
}

DenseTensor evaluate_isomer(const DeltaIsomer& iso, int dim) {
  DenseTensor t(dim, iso.order);
  const std::size_t npairs = iso.pairs.size();
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < npairs; ++i) assignments *= static_cast<std::size_t>(dim);
  MultiIndex idx(static_cast<std::size_t>(iso.order));
  for (std::size_t a = 0; a < assignments; ++a) {
    std::size_t rest = a;
    for (auto [lo, hi] : iso.pairs) {
      const int v = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
      idx[static_cast<std::size_t>(lo)] = v;
      idx[static_cast<std::size_t>(hi)] = v;
    }
    t.at(idx) = 1;
  }
  return t;
}

DenseTensor apply_isomer(const DeltaIsomer& iso, std::span<const DenseTensor> args) {
  const int free_order = iso.order - 2 * static_cast<int>(args.size());
  if (free_order < 0) throw std::invalid_argument("apply_isomer: more argument slots than isomer slots");
  int dim = 0;
  for (const auto& arg : args) {
    if (arg.order() != 2) throw std::invalid_argument("apply_isomer: arguments must be order-2 tensors");
    if (dim == 0) dim = arg.dim();
    if (arg.dim() != dim) throw std::invalid_argument("apply_isomer: argument dimension mismatch");
  }
  if (dim == 0) dim = 3;

  DenseTensor result(dim, free_order);
  const std::size_t npairs = iso.pairs.size();
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < npairs; ++i) assignments *= static_cast<std::size_t>(dim);

  // The isomer has exactly one nonzero component per pair-value assignment;
  // walk those instead of the full dim^order component grid.
  MultiIndex full(static_cast<std::size_t>(iso.order));
  MultiIndex free_idx(static_cast<std::size_t>(free_order));
  for (std::size_t a = 0; a < assignments; ++a) {
    std::size_t rest = a;
    for (auto [lo, hi] : iso.pairs) {
      const int v = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
      full[static_cast<std::size_t>(lo)] = v;
      full[static_cast<std::size_t>(hi)] = v;
    }
    Rational term(1);
    for (std::size_t k = 0; k < args.size(); ++k) {
      const int s0 = full[static_cast<std::size_t>(free_order) + 2 * k];
      const int s1 = full[static_cast<std::size_t>(free_order) + 2 * k + 1];
      term *= args[k].at({s0, s1});
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    std::copy(full.begin(), full.begin() + free_order, free_idx.begin());
    result.at(free_idx) += term;
  }
  return result;
}

DenseTensor apply_isomer(const DeltaIsomer& iso, std::initializer_list<DenseTensor> args) {
  return apply_isomer(iso, std::span<const DenseTensor>(args.begin(), args.size()));
}

}  // namespace isotensor
