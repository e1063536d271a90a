// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/rotations.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace isotensor {

std::vector<DenseTensor> proper_signed_permutations() {
  std::vector<DenseTensor> out;
  std::array<int, 3> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    int parity = 1;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        if (perm[a] > perm[b]) parity = -parity;
    for (int bits = 0; bits < 8; ++bits) {
      const std::array<int, 3> sign{(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1};
      if (parity * sign[0] * sign[1] * sign[2] != 1) continue;
      DenseTensor q(3, 2);
      for (int i = 0; i < 3; ++i)
        q.at({i, perm[static_cast<std::size_t>(i)]}) = sign[static_cast<std::size_t>(i)];
      out.push_back(std::move(q));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

DenseTensor rotate_tensor(const DenseTensor& Q, const DenseTensor& t) {
  if (Q.order() != 2 || Q.dim() != t.dim())
    throw std::invalid_argument("rotate_tensor: Q must be an order-2 tensor of matching dimension");
  const int d = t.dim();
  DenseTensor cur = t;
  // One slot at a time: cur'[.., i, ..] = sum_a Q[i, a] cur[.., a, ..].
  for (int slot = 0; slot < t.order(); ++slot) {
    DenseTensor next(d, t.order());
    for (std::size_t f = 0; f < cur.size(); ++f) {
      if (cur[f].is_zero()) continue;
      MultiIndex idx = cur.unflatten(f);
      const int a = idx[static_cast<std::size_t>(slot)];
      for (int i = 0; i < d; ++i) {
        const Rational& qia = Q.at({i, a});
        if (qia.is_zero()) continue;
        idx[static_cast<std::size_t>(slot)] = i;
        next.at(idx) += qia * cur[f];
      }
      idx[static_cast<std::size_t>(slot)] = a;
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace isotensor
