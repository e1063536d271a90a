// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "isotensor/basis.hpp"
#include "isotensor/rational_matrix.hpp"
#include "isotensor/tensor.hpp"

namespace isotensor {

/// Raised when an evaluation that assumes an incompressible mean flow
/// (tr U = 0 exactly) receives a velocity gradient with nonzero trace.
class CompressibleInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mean velocity gradient with its exact symmetric/antisymmetric split.
struct VelocityGradient {
  DenseTensor U, S, W;  // U = S + W, S symmetric, W antisymmetric

  static VelocityGradient from_tensor(const DenseTensor& U);
  bool incompressible() const { return trace(U).is_zero(); }
};

/// S = (U + U^T)/2 and W = (U - U^T)/2, exact.
std::pair<DenseTensor, DenseTensor> split_velocity_gradient(const DenseTensor& U);

/// U minus (tr U / 3) times the identity; the explicit way to make an input
/// incompressible. Never applied silently.
DenseTensor deviatoric_part(const DenseTensor& U);

/// Symmetric second-moment tensor. Positive semidefiniteness is a physical
/// admissibility condition, reported as advice, never enforced.
struct ReynoldsStress {
  DenseTensor T;

  static ReynoldsStress from_tensor(const DenseTensor& T);
  bool realizable() const;  // all principal minors >= 0, exact
};

/// The 13 coefficients of the contracted closure form, indexed against
/// derive_contracted_terms() order.
struct ClosureCoefficients {
  std::vector<Rational> a;  // size 13

  static ClosureCoefficients zero();
};

enum class MatrixSymbol { T, S, W };

/// One matrix-valued term of the contracted form: a product word over
/// {T, S, W} (optionally symmetrized with its transpose) times a monomial in
/// the scalar invariants trT, trT^2, tr(TS), tr(T^2 S).
struct ContractedTerm {
  std::string id;            // e.g. "S.trT", "I.trTS", "TS+ST.1"
  std::vector<MatrixSymbol> word;
  bool add_transpose = false;
  std::array<int, 4> invariant_exponents{};  // over (trT, trT2, trTS, trT2S)
  int t_degree = 0;

  DenseTensor evaluate(const DenseTensor& T, const DenseTensor& S, const DenseTensor& W) const;
};

/// The contracted basis, derived symbolically: each representation term is
/// contracted with a generic trace-free velocity gradient over polynomial
/// entries, terms proportional to tr S drop, the TST word is eliminated
/// through the cubic matrix identity, and the 28 -> 13 coefficient map is
/// solved exactly. Built once at first use.
class ContractedBasis {
 public:
  static const ContractedBasis& standard();

  const std::vector<ContractedTerm>& terms() const { return terms_; }  // 13
  /// Columns follow the model layout: 9 linear then 19 quadratic term ids.
  const RationalMatrix& coefficient_map() const { return map_; }  // 13 x 28
  /// TST = sum_m c_m * term_m; the reduction that removes the TST word.
  const std::vector<Rational>& tst_reduction() const { return tst_reduction_; }

 private:
  ContractedBasis();

  std::vector<ContractedTerm> terms_;
  RationalMatrix map_;
  std::vector<Rational> tst_reduction_;
};

/// The 13 matrix-valued terms spanning every contracted representation.
std::vector<ContractedTerm> derive_contracted_terms();

/// The linear 28 -> 13 coefficient aggregation.
ClosureCoefficients map_coefficients(const RepresentationModel& model);

/// Sum of a_m * term_m(T, S, W); exact and symmetric. Throws
/// CompressibleInputError if tr U != 0 (strict mode; no silent projection).
DenseTensor evaluate_closure(const ClosureCoefficients& coeffs, const ReynoldsStress& stress,
                             const VelocityGradient& gradient, bool strict = true);

/// Left side of the cubic matrix identity used to eliminate TST, evaluated
/// verbatim: 2 TST + 2(T^2 S + S T^2) - 2(TS + ST) trT - 2 T tr(TS)
/// - S trT^2 + S (trT)^2 + 2 I trT tr(TS) - 2 I tr(T^2 S).
/// Zero for every symmetric T and trace-free symmetric S. In strict mode a
/// trace-carrying S is rejected instead of evaluated.
DenseTensor verify_rivlin_identity(const DenseTensor& T, const DenseTensor& S, bool strict = true);

struct DualPathResult {
  DenseTensor lhs;  // direct contraction (A_ijkl + A_jikl) U_kl
  DenseTensor rhs;  // mapped 13-coefficient evaluation
  bool equal = false;
};

/// Runs both evaluation routes on the same inputs; exact equality is the
/// repo's end-to-end oracle for the derived map.
DualPathResult dual_path_check(const RepresentationModel& model, const DenseTensor& T,
                               const DenseTensor& U);

}  // namespace isotensor
