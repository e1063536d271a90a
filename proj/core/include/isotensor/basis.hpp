// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isotensor/isomer.hpp"
#include "isotensor/rational_matrix.hpp"
#include "isotensor/tensor.hpp"

namespace isotensor {

class SplitMix64;

/// The three ways to pair the four free slots (i, j, k, l).
enum class FreePairing { IJ_KL, IK_JL, IL_JK };

/// Slot pairs of a pairing, each (lo, hi).
std::array<std::pair<int, int>, 2> free_pairing_slots(FreePairing p);

/// Scalar invariant multiplying a skeleton: 1, tr T, (tr T)^2 or tr T^2.
enum class InvariantFactor { One, TrT, TrTSquared, TrT2 };

// Skeleton alternatives of a basis term.
struct DeltaDeltaSkeleton {  // delta x delta on the free slots
  FreePairing pairing;
  friend bool operator==(const DeltaDeltaSkeleton&, const DeltaDeltaSkeleton&) = default;
};
struct DeltaTSkeleton {  // delta on two free slots, T or T^2 on the other two
  std::pair<int, int> delta_slots;
  std::pair<int, int> t_slots;
  int t_power = 1;  // 1 or 2
  friend bool operator==(const DeltaTSkeleton&, const DeltaTSkeleton&) = default;
};
struct TTPairSkeleton {  // T_ab T_cd for one pairing of the free slots
  FreePairing pairing;
  friend bool operator==(const TTPairSkeleton&, const TTPairSkeleton&) = default;
};
struct TTSymSkeleton {  // T_ij T_kl + T_ik T_jl + T_il T_jk
  friend bool operator==(const TTSymSkeleton&, const TTSymSkeleton&) = default;
};
using TermSkeleton = std::variant<DeltaDeltaSkeleton, DeltaTSkeleton, TTPairSkeleton, TTSymSkeleton>;

/// One element of the representation basis: a tensorial skeleton times a
/// scalar invariant, with an evaluator to a fourth-order tensor. The id
/// string (e.g. "dT_ik_jl.1", "dd_ij_kl.trT", "TT_sym") is the stable
/// coefficient-ordering contract: terms sort bytewise by id within a degree.
struct TermShape {
  std::string id;
  int degree = 0;  // total power of T: 1 or 2
  TermSkeleton skeleton;
  InvariantFactor invariant = InvariantFactor::One;

  static TermShape make(TermSkeleton skeleton, InvariantFactor invariant);

  /// The fourth-order value at a symmetric T (any dimension).
  DenseTensor evaluate(const DenseTensor& T) const;

  /// This term as a coefficient tensor acting on T (order 6) or on T (x) T
  /// (order 8), symmetry-projected over the argument-slot symmetries so two
  /// terms are equal as functions of symmetric T exactly when these tensors
  /// are equal.
  DenseTensor coefficient_tensor(int dim) const;

  std::string skeleton_string() const;
  std::string invariant_string() const;
};

/// Generic-skeleton evaluation used both for rational tensors and for
/// symbolic (polynomial-entry) matrices. T_entries is a dim x dim row-major
/// symmetric matrix over any exact commutative ring R; returns dim^4 entries.
template <typename R>
std::vector<R> evaluate_term_shape(const TermShape& shape, int dim, std::span<const R> T_entries);

/// Coefficients over the canonical basis: 9 linear plus 19 quadratic, each
/// vector ordered by term id.
struct RepresentationModel {
  std::vector<Rational> linear;     // size 9
  std::vector<Rational> quadratic;  // size 19

  static RepresentationModel zero();
  static RepresentationModel random(SplitMix64& rng);
};

/// The derived basis data: term lists, the isomer-to-term collapse maps, and
/// the two determinant relations used to fold the three pure-TT shapes into
/// the single symmetrized one. Built once, exactly, at first use.
class RepresentationBasis {
 public:
  static const RepresentationBasis& standard();

  const std::vector<TermShape>& linear_terms() const { return linear_; }          // 9
  const std::vector<TermShape>& quadratic_terms() const { return quadratic_; }    // 19
  const std::vector<TermShape>& raw_quadratic_terms() const { return raw_; }      // 21

  const IsomerSet& isomers6() const { return iso6_; }
  const IsomerSet& isomers8() const { return iso8_; }

  /// For each order-6 isomer, the linear term it acts as on symmetric T.
  const std::vector<std::size_t>& linear_isomer_to_term() const { return lin_map_; }
  /// For each order-8 isomer, the raw quadratic term it acts as on T (x) T.
  const std::vector<std::size_t>& quadratic_isomer_to_raw() const { return quad_map_; }

  /// The two vanishing combinations (determinant contractions) expressed in
  /// raw-term coordinates; adding multiples of these changes nothing as a
  /// function of symmetric T.
  const std::vector<Rational>& raw_relation_alternating() const { return rel_alt_; }
  const std::vector<Rational>& raw_relation_front_paired() const { return rel_fp_; }

  /// Raw indices of the three pure-TT terms, in FreePairing order.
  const std::array<std::size_t, 3>& pure_tt_raw_indices() const { return tt_raw_; }

  /// Rewrites a raw 21-coordinate vector over the 19-term basis by shifting
  /// along the two relations until the three pure-TT coordinates coincide.
  std::vector<Rational> reduce_raw_to_basis(std::vector<Rational> raw21) const;

 private:
  RepresentationBasis();

  IsomerSet iso6_, iso8_;
  std::vector<TermShape> linear_, raw_, quadratic_;
  std::vector<std::size_t> lin_map_, quad_map_;
  std::vector<Rational> rel_alt_, rel_fp_;
  std::array<std::size_t, 3> tt_raw_{};
  std::vector<std::size_t> raw_to_quad_;  // shared shapes; pure-TT entries unused
  std::size_t ttsym_quad_ = 0;
};

/// The 9 distinct linear terms the order-6 isomers collapse to on a
/// symmetric argument.
std::vector<TermShape> generate_linear_terms();

/// The 19 quadratic terms: 21 raw shapes from the order-8 isomers with the
/// three pure-TT shapes folded into the symmetrized one.
std::vector<TermShape> generate_quadratic_terms();

/// Exact rank of the terms' symmetry-projected coefficient tensors, one row
/// each. All terms must share a degree.
std::size_t certify_independence(std::span<const TermShape> terms, int dim);

/// Sum of coefficient * term(T) over the whole model. Requires symmetric T
/// with dim == 3 (the quadratic reduction is three-dimensional).
DenseTensor evaluate_representation(const RepresentationModel& model, const DenseTensor& T);

/// Collapses per-isomer coefficient vectors (15 order-6, 105 order-8, both
/// in canonical enumeration order) onto the 9 + 19 basis. Evaluating the
/// result equals the direct per-isomer contraction for every symmetric T.
RepresentationModel reduce_alpha_beta(std::span<const Rational> alpha,
                                      std::span<const Rational> beta);

// --- template implementation ---

template <typename R>
std::vector<R> evaluate_term_shape(const TermShape& shape, int dim, std::span<const R> T_entries) {
  if (T_entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
    throw std::invalid_argument("evaluate_term_shape: entry count does not match dim");
  const auto at = [&](int a, int b) -> const R& {
    return T_entries[static_cast<std::size_t>(a * dim + b)];
  };

  std::vector<R> T2(T_entries.size());
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      R acc{};
      for (int e = 0; e < dim; ++e) acc += at(a, e) * at(e, b);
      T2[static_cast<std::size_t>(a * dim + b)] = std::move(acc);
    }
  R tr{};
  for (int a = 0; a < dim; ++a) tr += at(a, a);
  R tr2{};
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) tr2 += at(a, b) * at(b, a);

  R inv;
  switch (shape.invariant) {
    case InvariantFactor::One: inv = R(1); break;
    case InvariantFactor::TrT: inv = tr; break;
    case InvariantFactor::TrTSquared: inv = tr * tr; break;
    case InvariantFactor::TrT2: inv = tr2; break;
  }

  std::size_t n4 = 1;
  for (int i = 0; i < 4; ++i) n4 *= static_cast<std::size_t>(dim);
  std::vector<R> out(n4);

  std::array<int, 4> v{};
  for (std::size_t f = 0; f < n4; ++f) {
    std::size_t rest = f;
    for (int s = 3; s >= 0; --s) {
      v[static_cast<std::size_t>(s)] = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
    }
    const auto slot = [&](std::pair<int, int> p) { return std::pair<int, int>{v[static_cast<std::size_t>(p.first)], v[static_cast<std::size_t>(p.second)]}; };

    if (const auto* dd = std::get_if<DeltaDeltaSkeleton>(&shape.skeleton)) {
      const auto ps = free_pairing_slots(dd->pairing);
      const auto [a0, b0] = slot(ps[0]);
      const auto [a1, b1] = slot(ps[1]);
      if (a0 == b0 && a1 == b1) out[f] = inv;
    } else if (const auto* dt = std::get_if<DeltaTSkeleton>(&shape.skeleton)) {
      const auto [da, db] = slot(dt->delta_slots);
      if (da == db) {
        const auto [ta, tb] = slot(dt->t_slots);
        const R& m = dt->t_power == 1 ? at(ta, tb) : T2[static_cast<std::size_t>(ta * dim + tb)];
        out[f] = m * inv;
      }
    } else if (const auto* tt = std::get_if<TTPairSkeleton>(&shape.skeleton)) {
      const auto ps = free_pairing_slots(tt->pairing);
      const auto [a0, b0] = slot(ps[0]);
      const auto [a1, b1] = slot(ps[1]);
      out[f] = at(a0, b0) * at(a1, b1) * inv;
    } else {
      R acc{};
      for (FreePairing p : {FreePairing::IJ_KL, FreePairing::IK_JL, FreePairing::IL_JK}) {
        const auto ps = free_pairing_slots(p);
        const auto [a0, b0] = slot(ps[0]);
        const auto [a1, b1] = slot(ps[1]);
        acc += at(a0, b0) * at(a1, b1);
      }
      out[f] = acc * inv;
    }
  }
  return out;
}

}  // namespace isotensor
