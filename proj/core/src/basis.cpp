// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/basis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "isotensor/kronecker.hpp"
#include "isotensor/rng.hpp"

namespace isotensor {

namespace {

constexpr std::size_t kNoQuadIndex = static_cast<std::size_t>(-1);

char slot_letter(int s) { return "ijkl"[s]; }

std::string pair_letters(std::pair<int, int> p) {
  return std::string{slot_letter(p.first), slot_letter(p.second)};
}

int skeleton_t_power(const TermSkeleton& s) {
  if (std::holds_alternative<DeltaDeltaSkeleton>(s)) return 0;
  if (const auto* dt = std::get_if<DeltaTSkeleton>(&s)) return dt->t_power;
  return 2;
}

int invariant_t_power(InvariantFactor f) {
  switch (f) {
    case InvariantFactor::One: return 0;
    case InvariantFactor::TrT: return 1;
    default: return 2;
  }
}

// Average of a tensor over the slot symmetries of its argument slots:
// within-pair swaps and, for two argument pairs, the pair exchange. Two
// coefficient tensors act identically on symmetric arguments exactly when
// their projections coincide.
DenseTensor project_argument_symmetries(const DenseTensor& t) {
  const int order = t.order();
  if (order == 6) {
    std::vector<int> swap45{0, 1, 2, 3, 5, 4};
    return (t + permute(t, swap45)) * Rational(1, 2);
  }
  if (order != 8) throw std::invalid_argument("project_argument_symmetries: order 6 or 8 required");
  static const std::array<std::array<int, 4>, 8> kTails = {{
      {4, 5, 6, 7}, {5, 4, 6, 7}, {4, 5, 7, 6}, {5, 4, 7, 6},
      {6, 7, 4, 5}, {7, 6, 4, 5}, {6, 7, 5, 4}, {7, 6, 5, 4},
  }};
  DenseTensor sum(t.dim(), 8);
  for (const auto& tail : kTails) {
    std::vector<int> perm{0, 1, 2, 3, tail[0], tail[1], tail[2], tail[3]};
    sum += permute(t, perm);
  }
  return sum * Rational(1, 8);
}

// The defining isomer pairs of a shape's coefficient tensor. Argument slots
// start at 4: one T occupies (4,5), a second (6,7).
std::vector<std::vector<std::pair<int, int>>> defining_isomers(const TermShape& shape) {
  const auto tt_pairs = [](FreePairing p) {
    const auto ps = free_pairing_slots(p);
    return std::vector<std::pair<int, int>>{
        {ps[0].first, 4}, {ps[0].second, 5}, {ps[1].first, 6}, {ps[1].second, 7}};
  };
  if (const auto* dd = std::get_if<DeltaDeltaSkeleton>(&shape.skeleton)) {
    const auto ps = free_pairing_slots(dd->pairing);
    switch (shape.invariant) {
      case InvariantFactor::TrT: return {{ps[0], ps[1], {4, 5}}};
      case InvariantFactor::TrTSquared: return {{ps[0], ps[1], {4, 5}, {6, 7}}};
      case InvariantFactor::TrT2: return {{ps[0], ps[1], {4, 6}, {5, 7}}};
      default: break;
    }
  } else if (const auto* dt = std::get_if<DeltaTSkeleton>(&shape.skeleton)) {
    const auto [t0, t1] = dt->t_slots;
    if (dt->t_power == 1 && shape.invariant == InvariantFactor::One)
      return {{dt->delta_slots, {t0, 4}, {t1, 5}}};
    if (dt->t_power == 1 && shape.invariant == InvariantFactor::TrT)
      return {{dt->delta_slots, {t0, 4}, {t1, 5}, {6, 7}}};
    if (dt->t_power == 2 && shape.invariant == InvariantFactor::One)
      return {{dt->delta_slots, {t0, 4}, {5, 6}, {t1, 7}}};
  } else if (const auto* tt = std::get_if<TTPairSkeleton>(&shape.skeleton)) {
    if (shape.invariant == InvariantFactor::One) return {tt_pairs(tt->pairing)};
  } else if (shape.invariant == InvariantFactor::One) {
    return {tt_pairs(FreePairing::IJ_KL), tt_pairs(FreePairing::IK_JL), tt_pairs(FreePairing::IL_JK)};
  }
  throw std::logic_error("defining_isomers: unsupported skeleton/invariant combination");
}

std::vector<Rational> tensor_key(const DenseTensor& t) {
  return std::vector<Rational>(t.entries().begin(), t.entries().end());
}

void sort_by_id(std::vector<TermShape>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const TermShape& a, const TermShape& b) { return a.id < b.id; });
}

std::vector<TermShape> named_linear_shapes() {
  std::vector<TermShape> out;
  for (FreePairing p : {FreePairing::IJ_KL, FreePairing::IK_JL, FreePairing::IL_JK})
    out.push_back(TermShape::make(DeltaDeltaSkeleton{p}, InvariantFactor::TrT));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<int> rest;
      for (int s = 0; s < 4; ++s)
        if (s != a && s != b) rest.push_back(s);
      out.push_back(TermShape::make(
          DeltaTSkeleton{{a, b}, {rest[0], rest[1]}, 1}, InvariantFactor::One));
    }
  sort_by_id(out);
  return out;
}

std::vector<TermShape> named_raw_quadratic_shapes() {
  std::vector<TermShape> out;
  for (FreePairing p : {FreePairing::IJ_KL, FreePairing::IK_JL, FreePairing::IL_JK}) {
    out.push_back(TermShape::make(DeltaDeltaSkeleton{p}, InvariantFactor::TrTSquared));
    out.push_back(TermShape::make(DeltaDeltaSkeleton{p}, InvariantFactor::TrT2));
    out.push_back(TermShape::make(TTPairSkeleton{p}, InvariantFactor::One));
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<int> rest;
      for (int s = 0; s < 4; ++s)
        if (s != a && s != b) rest.push_back(s);
      const DeltaTSkeleton base{{a, b}, {rest[0], rest[1]}, 1};
      out.push_back(TermShape::make(base, InvariantFactor::TrT));
      out.push_back(TermShape::make(DeltaTSkeleton{base.delta_slots, base.t_slots, 2},
                                    InvariantFactor::One));
    }
  sort_by_id(out);
  return out;
}

}  // namespace

std::array<std::pair<int, int>, 2> free_pairing_slots(FreePairing p) {
  switch (p) {
    case FreePairing::IJ_KL: return {{{0, 1}, {2, 3}}};
    case FreePairing::IK_JL: return {{{0, 2}, {1, 3}}};
    default: return {{{0, 3}, {1, 2}}};
  }
}

TermShape TermShape::make(TermSkeleton skeleton, InvariantFactor invariant) {
  if (auto* dt = std::get_if<DeltaTSkeleton>(&skeleton)) {
    auto norm = [](std::pair<int, int>& p) {
      if (p.first > p.second) std::swap(p.first, p.second);
    };
    norm(dt->delta_slots);
    norm(dt->t_slots);
    const std::array<int, 4> slots{dt->delta_slots.first, dt->delta_slots.second,
                                   dt->t_slots.first, dt->t_slots.second};
    std::array<bool, 4> seen{};
    for (int s : slots) {
      if (s < 0 || s > 3 || seen[static_cast<std::size_t>(s)])
        throw std::invalid_argument("TermShape: free slots must partition {i,j,k,l}");
      seen[static_cast<std::size_t>(s)] = true;
    }
    if (dt->t_power != 1 && dt->t_power != 2)
      throw std::invalid_argument("TermShape: T power must be 1 or 2");
  }
  TermShape t;
  t.skeleton = std::move(skeleton);
  t.invariant = invariant;
  t.degree = skeleton_t_power(t.skeleton) + invariant_t_power(invariant);
  if (t.degree != 1 && t.degree != 2)
    throw std::invalid_argument("TermShape: total degree must be 1 or 2");
  t.id = t.skeleton_string();
  if (!std::holds_alternative<TTPairSkeleton>(t.skeleton) &&
      !std::holds_alternative<TTSymSkeleton>(t.skeleton))
    t.id += "." + t.invariant_string();
  return t;
}

std::string TermShape::skeleton_string() const {
  if (const auto* dd = std::get_if<DeltaDeltaSkeleton>(&skeleton)) {
    const auto ps = free_pairing_slots(dd->pairing);
    return "dd_" + pair_letters(ps[0]) + "_" + pair_letters(ps[1]);
  }
  if (const auto* dt = std::get_if<DeltaTSkeleton>(&skeleton)) {
    return std::string("dT") + (dt->t_power == 2 ? "2" : "") + "_" +
           pair_letters(dt->delta_slots) + "_" + pair_letters(dt->t_slots);
  }
  if (const auto* tt = std::get_if<TTPairSkeleton>(&skeleton)) {
    const auto ps = free_pairing_slots(tt->pairing);
    return "TT_" + pair_letters(ps[0]) + "_" + pair_letters(ps[1]);
  }
  return "TT_sym";
}

std::string TermShape::invariant_string() const {
  switch (invariant) {
    case InvariantFactor::One: return "1";
    case InvariantFactor::TrT: return "trT";
    case InvariantFactor::TrTSquared: return "trT_sq";
    default: return "trT2";
  }
}

DenseTensor TermShape::evaluate(const DenseTensor& T) const {
  if (T.order() != 2 || !is_symmetric(T))
    throw std::invalid_argument("TermShape::evaluate: symmetric order-2 T required");
  std::vector<Rational> vals =
      evaluate_term_shape<Rational>(*this, T.dim(), T.entries());
  DenseTensor out(T.dim(), 4);
  for (std::size_t f = 0; f < vals.size(); ++f) out[f] = std::move(vals[f]);
  return out;
}

DenseTensor TermShape::coefficient_tensor(int dim) const {
  const int order = degree == 1 ? 6 : 8;
  DenseTensor sum(dim, order);
  for (const auto& pairs : defining_isomers(*this))
    sum += evaluate_isomer(DeltaIsomer::from_pairs(order, pairs), dim);
  return project_argument_symmetries(sum);
}

RepresentationModel RepresentationModel::zero() {
  return RepresentationModel{std::vector<Rational>(9), std::vector<Rational>(19)};
}

RepresentationModel RepresentationModel::random(SplitMix64& rng) {
  RepresentationModel m = zero();
  for (auto& c : m.linear) c = random_rational(rng);
  for (auto& c : m.quadratic) c = random_rational(rng);
  return m;
}

RepresentationBasis::RepresentationBasis()
    : iso6_(enumerate_isomers(6)), iso8_(enumerate_isomers(8)) {
  linear_ = named_linear_shapes();
  raw_ = named_raw_quadratic_shapes();

  // Reduced list: every raw shape except the pure-TT three, plus the
  // symmetrized representative.
  for (const auto& t : raw_)
    if (!std::holds_alternative<TTPairSkeleton>(t.skeleton)) quadratic_.push_back(t);
  quadratic_.push_back(TermShape::make(TTSymSkeleton{}, InvariantFactor::One));
  sort_by_id(quadratic_);

  // Collapse maps: isomers acting identically on symmetric arguments share a
  // projected coefficient tensor, and every class must match a named shape.
  const auto build_map = [](const IsomerSet& set, const std::vector<TermShape>& named,
                            std::vector<std::size_t>& map_out) {
    std::map<std::vector<Rational>, std::size_t> keys;
    for (std::size_t t = 0; t < named.size(); ++t)
      if (!keys.emplace(tensor_key(named[t].coefficient_tensor(3)), t).second)
        throw std::logic_error("representation basis: named shapes not distinct");
    std::vector<bool> hit(named.size(), false);
    map_out.resize(set.count());
    for (std::size_t i = 0; i < set.count(); ++i) {
      const DenseTensor projected = project_argument_symmetries(evaluate_isomer(set.isomers[i], 3));
      const auto it = keys.find(tensor_key(projected));
      if (it == keys.end())
        throw std::logic_error("representation basis: isomer action matches no named shape");
      map_out[i] = it->second;
      hit[it->second] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      throw std::logic_error("representation basis: named shape not produced by any isomer");
  };
  build_map(iso6_, linear_, lin_map_);
  build_map(iso8_, raw_, quad_map_);

  // Index bookkeeping between the raw and reduced lists.
  raw_to_quad_.assign(raw_.size(), kNoQuadIndex);
  std::size_t tt_seen = 0;
  for (std::size_t r = 0; r < raw_.size(); ++r) {
    if (const auto* tt = std::get_if<TTPairSkeleton>(&raw_[r].skeleton)) {
      tt_raw_[static_cast<std::size_t>(tt->pairing)] = r;
      ++tt_seen;
      continue;
    }
    const auto it = std::find_if(quadratic_.begin(), quadratic_.end(),
                                 [&](const TermShape& q) { return q.id == raw_[r].id; });
    raw_to_quad_[r] = static_cast<std::size_t>(it - quadratic_.begin());
  }
  if (tt_seen != 3) throw std::logic_error("representation basis: expected three pure-TT shapes");
  for (std::size_t q = 0; q < quadratic_.size(); ++q)
    if (std::holds_alternative<TTSymSkeleton>(quadratic_[q].skeleton)) ttsym_quad_ = q;

  // The two determinant contractions, folded to raw-term coordinates. Both
  // vanish identically on symmetric T in three dimensions, so they are the
  // lawful moves for rewriting the pure-TT coordinates.
  const auto fold = [&](const GenKroneckerSpec& spec) {
    const std::vector<Rational> per_isomer = expand_as_isomer_combination(spec, iso8_);
    std::vector<Rational> raw(raw_.size());
    for (std::size_t i = 0; i < per_isomer.size(); ++i) raw[quad_map_[i]] += per_isomer[i];
    return raw;
  };
  rel_alt_ = fold(GenKroneckerSpec::alternating());
  rel_fp_ = fold(GenKroneckerSpec::front_paired());
}

const RepresentationBasis& RepresentationBasis::standard() {
  static const RepresentationBasis basis;
  return basis;
}

std::vector<Rational> RepresentationBasis::reduce_raw_to_basis(std::vector<Rational> raw21) const {
  if (raw21.size() != raw_.size())
    throw std::invalid_argument("reduce_raw_to_basis: expected 21 coordinates");
  const auto [t0, t1, t2] = tt_raw_;
  RationalMatrix rows(2, 2);
  rows.at(0, 0) = rel_alt_[t0] - rel_alt_[t1];
  rows.at(0, 1) = rel_alt_[t1] - rel_alt_[t2];
  rows.at(1, 0) = rel_fp_[t0] - rel_fp_[t1];
  rows.at(1, 1) = rel_fp_[t1] - rel_fp_[t2];
  const std::vector<Rational> target{raw21[t1] - raw21[t0], raw21[t2] - raw21[t1]};
  const SpanSolve solve = solve_in_span(target, rows);
  if (!solve.in_span)
    throw std::logic_error("reduce_raw_to_basis: relations cannot equalize TT coordinates");
  for (std::size_t j = 0; j < raw21.size(); ++j)
    raw21[j] += solve.coeffs[0] * rel_alt_[j] + solve.coeffs[1] * rel_fp_[j];
  if (raw21[t0] != raw21[t1] || raw21[t1] != raw21[t2])
    throw std::logic_error("reduce_raw_to_basis: TT coordinates failed to equalize");

  std::vector<Rational> out(quadratic_.size());
  for (std::size_t r = 0; r < raw_.size(); ++r)
    if (raw_to_quad_[r] != kNoQuadIndex) out[raw_to_quad_[r]] = raw21[r];
  out[ttsym_quad_] = raw21[t0];
  return out;
}

std::vector<TermShape> generate_linear_terms() {
  return RepresentationBasis::standard().linear_terms();
}

std::vector<TermShape> generate_quadratic_terms() {
  return RepresentationBasis::standard().quadratic_terms();
}

std::size_t certify_independence(std::span<const TermShape> terms, int dim) {
  if (terms.empty()) return 0;
  RationalMatrix m;
  const int degree = terms.front().degree;
  for (const auto& t : terms) {
    if (t.degree != degree)
      throw std::invalid_argument("certify_independence: mixed-degree term list");
    m.append_row(t.coefficient_tensor(dim).entries());
  }
  return rank(m);
}

DenseTensor evaluate_representation(const RepresentationModel& model, const DenseTensor& T) {
  if (T.dim() != 3 || T.order() != 2 || !is_symmetric(T))
    throw std::invalid_argument("evaluate_representation: symmetric 3x3 T required");
  const auto& basis = RepresentationBasis::standard();
  if (model.linear.size() != basis.linear_terms().size() ||
      model.quadratic.size() != basis.quadratic_terms().size())
    throw std::invalid_argument("evaluate_representation: model must carry 9 + 19 coefficients");
  DenseTensor out(3, 4);
  for (std::size_t i = 0; i < model.linear.size(); ++i)
    if (!model.linear[i].is_zero())
      out += model.linear[i] * basis.linear_terms()[i].evaluate(T);
  for (std::size_t i = 0; i < model.quadratic.size(); ++i)
    if (!model.quadratic[i].is_zero())
      out += model.quadratic[i] * basis.quadratic_terms()[i].evaluate(T);
  return out;
}

RepresentationModel reduce_alpha_beta(std::span<const Rational> alpha,
                                      std::span<const Rational> beta) {
  const auto& basis = RepresentationBasis::standard();
  if (alpha.size() != 15 || beta.size() != 105)
    throw std::invalid_argument("reduce_alpha_beta: expected 15 + 105 coefficients");
  RepresentationModel model = RepresentationModel::zero();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    model.linear[basis.linear_isomer_to_term()[i]] += alpha[i];
  std::vector<Rational> raw(basis.raw_quadratic_terms().size());
  for (std::size_t i = 0; i < beta.size(); ++i)
    raw[basis.quadratic_isomer_to_raw()[i]] += beta[i];
  model.quadratic = basis.reduce_raw_to_basis(std::move(raw));
  return model;
}

}  // namespace isotensor
