// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/kronecker.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace isotensor {

namespace {

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Calls fn(sign, isomer) for every signed term of the determinant expansion.
template <typename Fn>
void for_each_signed_term(const GenKroneckerSpec& spec, Fn&& fn) {
  std::vector<int> perm(static_cast<std::size_t>(spec.size));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(perm.size());
    for (std::size_t a = 0; a < perm.size(); ++a)
      pairs.emplace_back(spec.upper[a], spec.lower[static_cast<std::size_t>(perm[a])]);
    fn(permutation_sign(perm), DeltaIsomer::from_pairs(2 * spec.size, std::move(pairs)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void require_symmetric_d3(const DenseTensor& T, const char* who) {
  if (T.dim() != 3 || T.order() != 2)
    throw std::invalid_argument(std::string(who) + ": 3x3 tensor required");
  if (!is_symmetric(T)) throw std::invalid_argument(std::string(who) + ": symmetric T required");
}

}  // namespace

GenKroneckerSpec GenKroneckerSpec::make(std::vector<int> upper, std::vector<int> lower) {
  const int k = static_cast<int>(upper.size());
  if (k < 2 || k > 4 || lower.size() != upper.size())
    throw std::invalid_argument("GenKroneckerSpec: size must be in [2, 4] with equal upper/lower lists");
  std::vector<bool> seen(static_cast<std::size_t>(2 * k), false);
  for (const auto* v : {&upper, &lower})
    for (int s : *v) {
      if (s < 0 || s >= 2 * k) throw std::invalid_argument("GenKroneckerSpec: slot label out of range");
      if (seen[static_cast<std::size_t>(s)])
        throw std::invalid_argument("GenKroneckerSpec: slot label repeated");
      seen[static_cast<std::size_t>(s)] = true;
    }
  return GenKroneckerSpec{k, std::move(upper), std::move(lower)};
}

GenKroneckerSpec GenKroneckerSpec::alternating() { return make({0, 2, 4, 6}, {1, 3, 5, 7}); }
GenKroneckerSpec GenKroneckerSpec::front_paired() { return make({0, 1, 4, 6}, {2, 3, 5, 7}); }

DenseTensor gen_kronecker(const GenKroneckerSpec& spec, int dim) {
  DenseTensor result(dim, 2 * spec.size);
  for_each_signed_term(spec, [&](int sign, const DeltaIsomer& iso) {
    DenseTensor term = evaluate_isomer(iso, dim);
    result += sign > 0 ? term : -term;
  });
  return result;
}

std::vector<Rational> expand_as_isomer_combination(const GenKroneckerSpec& spec,
                                                   const IsomerSet& set) {
  if (set.order != 2 * spec.size)
    throw std::invalid_argument("expand_as_isomer_combination: isomer set order mismatch");
  std::vector<Rational> coeffs(set.count());
  for_each_signed_term(spec, [&](int sign, const DeltaIsomer& iso) {
    auto idx = set.index_of(iso);
    if (!idx) throw std::logic_error("expand_as_isomer_combination: isomer missing from canonical set");
    coeffs[*idx] += sign;
  });
  return coeffs;
}

DenseTensor contract_with_TT(const GenKroneckerSpec& spec, const DenseTensor& T) {
  if (spec.size != 4) throw std::invalid_argument("contract_with_TT: k = 4 spec required");
  require_symmetric_d3(T, "contract_with_TT");
  DenseTensor result(3, 4);
  for_each_signed_term(spec, [&](int sign, const DeltaIsomer& iso) {
    DenseTensor term = apply_isomer(iso, {T, T});
    result += sign > 0 ? term : -term;
  });
  return result;
}

DenseTensor grouped_expansion(QuadIdentity which, const DenseTensor& T) {
  if (T.order() != 2 || !is_symmetric(T))
    throw std::invalid_argument("grouped_expansion: symmetric order-2 T required");
  const int d = T.dim();
  const DenseTensor T2 = matmul(T, T);
  const TraceInvariants inv = trace_invariants(T);
  const Rational tr_diff = inv.trT_squared - inv.trT2;

  auto delta = [](int a, int b) { return Rational(a == b ? 1 : 0); };
  DenseTensor out(d, 4);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rational v;
          if (which == QuadIdentity::AlternatingSlots) {
            v += Rational(2) * (T.at({i, j}) * T.at({k, l}) - T.at({i, l}) * T.at({j, k}));
            v += (delta(i, j) * delta(k, l) - delta(i, l) * delta(j, k)) * tr_diff;
            v += Rational(2) * (delta(i, j) * T2.at({k, l}) + delta(k, l) * T2.at({i, j}) -
                                delta(i, l) * T2.at({j, k}) - delta(j, k) * T2.at({i, l}));
            v += Rational(2) * (delta(i, l) * T.at({j, k}) + delta(j, k) * T.at({i, l}) -
                                delta(i, j) * T.at({k, l}) - delta(k, l) * T.at({i, j})) *
                 inv.trT;
          } else {
            v += Rational(2) * (T.at({i, k}) * T.at({j, l}) - T.at({i, l}) * T.at({j, k}));
            v += (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k)) * tr_diff;
            v += Rational(2) * (delta(i, k) * T2.at({j, l}) + delta(j, l) * T2.at({i, k}) -
                                delta(i, l) * T2.at({j, k}) - delta(j, k) * T2.at({i, l}));
            v += Rational(2) * (-delta(i, k) * T.at({j, l}) - delta(j, l) * T.at({i, k}) +
                                delta(i, l) * T.at({j, k}) + delta(j, k) * T.at({i, l})) *
                 inv.trT;
          }
          out.at({i, j, k, l}) = std::move(v);
        }
  return out;
}

DenseTensor verify_grouped_expansion(QuadIdentity which, const DenseTensor& T) {
  require_symmetric_d3(T, "verify_grouped_expansion");
  const GenKroneckerSpec spec = which == QuadIdentity::AlternatingSlots
                                    ? GenKroneckerSpec::alternating()
                                    : GenKroneckerSpec::front_paired();
  return grouped_expansion(which, T) - contract_with_TT(spec, T);
}

}  // namespace isotensor
