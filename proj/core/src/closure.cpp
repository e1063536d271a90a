// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#include "isotensor/closure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "isotensor/poly.hpp"

namespace isotensor {

namespace {

// Symbolic 3x3 matrices over Poly. Variables 0..5 hold the six independent
// entries of a symmetric T; variables 6..13 hold a velocity gradient with
// the last diagonal entry substituted as -(u00 + u11), so tr U = tr S = 0
// holds identically, not just on samples.
using PolyMat = std::array<Poly, 9>;

PolyMat symbolic_symmetric_T() {
  PolyMat t;
  const int var[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[static_cast<std::size_t>(i * 3 + j)] = Poly::variable(static_cast<std::size_t>(var[i][j]));
  return t;
}

PolyMat symbolic_tracefree_U() {
  PolyMat u;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int flat = i * 3 + j;
      if (flat == 8) continue;
      u[static_cast<std::size_t>(flat)] = Poly::variable(static_cast<std::size_t>(6 + flat));
    }
  u[8] = -(Poly::variable(6) + Poly::variable(10));
  return u;
}

PolyMat pm_add(const PolyMat& a, const PolyMat& b) {
  PolyMat r;
  for (std::size_t i = 0; i < 9; ++i) r[i] = a[i] + b[i];
  return r;
}

PolyMat pm_sub(const PolyMat& a, const PolyMat& b) {
  PolyMat r;
  for (std::size_t i = 0; i < 9; ++i) r[i] = a[i] - b[i];
  return r;
}

PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly acc;
      for (int k = 0; k < 3; ++k)
        acc += a[static_cast<std::size_t>(i * 3 + k)] * b[static_cast<std::size_t>(k * 3 + j)];
      r[static_cast<std::size_t>(i * 3 + j)] = std::move(acc);
    }
  return r;
}

PolyMat pm_transpose(const PolyMat& a) {
  PolyMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(i * 3 + j)] = a[static_cast<std::size_t>(j * 3 + i)];
  return r;
}

PolyMat pm_scale(PolyMat a, const Rational& s) {
  for (auto& e : a) e *= s;
  return a;
}

Poly pm_trace(const PolyMat& a) { return a[0] + a[4] + a[8]; }

bool pm_is_zero(const PolyMat& a) {
  return std::all_of(a.begin(), a.end(), [](const Poly& p) { return p.is_zero(); });
}

std::string collapse_word(std::span<const MatrixSymbol> word) {
  static constexpr const char* kNames[] = {"T", "S", "W"};
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t run = i + 1;
    while (run < word.size() && word[run] == word[i]) ++run;
    out += kNames[static_cast<std::size_t>(word[i])];
    if (run - i > 1) out += std::to_string(run - i);
    i = run;
  }
  return out.empty() ? "I" : out;
}

struct KernelCandidate {
  std::string name;
  std::vector<MatrixSymbol> word;
  bool add_transpose = false;
  int t_degree = 0, u_degree = 0;
  PolyMat value;
};

// Normalized (sign-insensitive) key for a polynomial matrix.
std::array<Poly, 9> sign_normalized(PolyMat m) {
  for (const auto& e : m) {
    if (e.is_zero()) continue;
    if (e.leading_coefficient().sign() < 0)
      for (auto& x : m) x = -x;
    break;
  }
  return m;
}

std::vector<KernelCandidate> kernel_candidates(const PolyMat& T, const PolyMat& S,
                                               const PolyMat& W) {
  std::vector<KernelCandidate> out;
  std::vector<std::array<Poly, 9>> seen;

  PolyMat eye{};
  for (int i = 0; i < 3; ++i) eye[static_cast<std::size_t>(i * 4)] = Poly(1);
  out.push_back({"I", {}, false, 0, 0, eye});
  out.push_back({"T", {MatrixSymbol::T}, false, 1, 0, T});
  out.push_back({"T2", {MatrixSymbol::T, MatrixSymbol::T}, false, 2, 0, pm_mul(T, T)});

  const auto matrix_of = [&](MatrixSymbol s) -> const PolyMat& {
    return s == MatrixSymbol::T ? T : (s == MatrixSymbol::S ? S : W);
  };

  for (int len = 1; len <= 3; ++len)
    for (MatrixSymbol letter : {MatrixSymbol::S, MatrixSymbol::W})
      for (int pos = len - 1; pos >= 0; --pos) {
        std::vector<MatrixSymbol> word(static_cast<std::size_t>(len), MatrixSymbol::T);
        word[static_cast<std::size_t>(pos)] = letter;

        PolyMat value = matrix_of(word[0]);
        for (std::size_t i = 1; i < word.size(); ++i) value = pm_mul(value, matrix_of(word[i]));
        const PolyMat value_t = pm_transpose(value);

        KernelCandidate k;
        k.word = word;
        k.t_degree = len - 1;
        k.u_degree = 1;
        if (value == value_t) {
          k.add_transpose = false;
          k.value = value;
          k.name = collapse_word(word);
        } else {
          k.add_transpose = true;
          k.value = pm_add(value, value_t);
          if (pm_is_zero(k.value)) continue;  // e.g. W + W^T
          std::vector<MatrixSymbol> rev(word.rbegin(), word.rend());
          k.name = collapse_word(word) + (letter == MatrixSymbol::W ? "-" : "+") + collapse_word(rev);
        }
        const auto key = sign_normalized(k.value);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.push_back(std::move(k));
      }
  return out;
}

struct ScalarInvariant {
  const char* name;
  Poly value;
  int t_degree, u_degree;
};

// The canonical term order pins a-coefficient indices; the derivation must
// produce exactly these ids (the trailing TST entry is the one eliminated).
constexpr const char* kCanonicalTermOrder[] = {
    "S.trT",    "I.trTS",      "TS+ST.1",   "TW-WT.1",   "S.trT_sq",
    "S.trT2",   "I.trT.trTS",  "TS+ST.trT", "TW-WT.trT", "I.trT2S",
    "T2S+ST2.1", "T2W-WT2.1",  "T.trTS",    "TST.1",
};
constexpr std::size_t kTermCount = 13;

struct SymbolicTerm {
  ContractedTerm term;
  PolyMat value;
};

// (entry, monomial) -> dense column index, shared by every solve.
using ColumnIndex = std::map<std::pair<std::size_t, Poly::Monomial>, std::size_t>;

void collect_columns(const PolyMat& m, ColumnIndex& cols) {
  for (std::size_t e = 0; e < 9; ++e)
    for (const auto& [mono, coeff] : m[e].terms()) cols.try_emplace({e, mono}, cols.size());
}

std::vector<Rational> vectorize(const PolyMat& m, const ColumnIndex& cols) {
  std::vector<Rational> v(cols.size());
  for (std::size_t e = 0; e < 9; ++e)
    for (const auto& [mono, coeff] : m[e].terms()) v[cols.at({e, mono})] = coeff;
  return v;
}

// B_ijkl U_kl with B the (i<->j)-symmetrized shape value at the symbolic T.
PolyMat contracted_shape_value(const TermShape& shape, const std::vector<Poly>& T_entries,
                               const PolyMat& U) {
  const std::vector<Poly> A =
      evaluate_term_shape<Poly>(shape, 3, std::span<const Poly>(T_entries));
  const auto idx = [](int i, int j, int k, int l) {
    return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l);
  };
  PolyMat phi{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly acc;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          acc += (A[idx(i, j, k, l)] + A[idx(j, i, k, l)]) * U[static_cast<std::size_t>(k * 3 + l)];
      phi[static_cast<std::size_t>(i * 3 + j)] = std::move(acc);
    }
  return phi;
}

Rational pow_rational(const Rational& base, int exp) {
  Rational r(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void require_symmetric_d3(const DenseTensor& t, const char* who) {
  if (t.dim() != 3 || t.order() != 2)
    throw std::invalid_argument(std::string(who) + ": 3x3 tensor required");
  if (!is_symmetric(t)) throw std::invalid_argument(std::string(who) + ": symmetric tensor required");
}

Rational det3(const DenseTensor& m) {
  auto e = [&](int i, int j) { return m.at({i, j}); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

std::pair<DenseTensor, DenseTensor> split_velocity_gradient(const DenseTensor& U) {
  if (U.dim() != 3 || U.order() != 2)
    throw std::invalid_argument("split_velocity_gradient: 3x3 tensor required");
  const DenseTensor Ut = transpose(U);
  const Rational half(1, 2);
  return {(U + Ut) * half, (U - Ut) * half};
}

DenseTensor deviatoric_part(const DenseTensor& U) {
  if (U.order() != 2) throw std::invalid_argument("deviatoric_part: order-2 tensor required");
  return U - DenseTensor::identity(U.dim()) * (trace(U) / Rational(U.dim()));
}

VelocityGradient VelocityGradient::from_tensor(const DenseTensor& U) {
  auto [S, W] = split_velocity_gradient(U);
  return VelocityGradient{U, std::move(S), std::move(W)};
}

ReynoldsStress ReynoldsStress::from_tensor(const DenseTensor& T) {
  require_symmetric_d3(T, "ReynoldsStress");
  return ReynoldsStress{T};
}

bool ReynoldsStress::realizable() const {
  for (int i = 0; i < 3; ++i)
    if (T.at({i, i}).sign() < 0) return false;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const Rational minor = T.at({a, a}) * T.at({b, b}) - T.at({a, b}) * T.at({b, a});
      if (minor.sign() < 0) return false;
    }
  return det3(T).sign() >= 0;
}

ClosureCoefficients ClosureCoefficients::zero() {
  return ClosureCoefficients{std::vector<Rational>(kTermCount)};
}

DenseTensor ContractedTerm::evaluate(const DenseTensor& T, const DenseTensor& S,
                                     const DenseTensor& W) const {
  DenseTensor m = DenseTensor::identity(3);
  for (MatrixSymbol sym : word)
    m = matmul(m, sym == MatrixSymbol::T ? T : (sym == MatrixSymbol::S ? S : W));
  if (add_transpose) m += transpose(m);

  const TraceInvariants ti = trace_invariants(T);
  const Rational trTS = trace(matmul(T, S));
  const Rational trT2S = trace(matmul(matmul(T, T), S));
  Rational inv(1);
  inv *= pow_rational(ti.trT, invariant_exponents[0]);
  inv *= pow_rational(ti.trT2, invariant_exponents[1]);
  inv *= pow_rational(trTS, invariant_exponents[2]);
  inv *= pow_rational(trT2S, invariant_exponents[3]);
  return m * inv;
}

ContractedBasis::ContractedBasis() {
  const PolyMat T = symbolic_symmetric_T();
  const PolyMat U = symbolic_tracefree_U();
  const PolyMat S = pm_scale(pm_add(U, pm_transpose(U)), Rational(1, 2));
  const PolyMat W = pm_scale(pm_sub(U, pm_transpose(U)), Rational(1, 2));
  const PolyMat T2 = pm_mul(T, T);

  // Identically vanishing traces; these justify dropping W-traces and every
  // term proportional to tr S during the derivation.
  for (const Poly& mustvanish :
       {pm_trace(S), pm_trace(W), pm_trace(pm_mul(T, W)), pm_trace(pm_mul(T2, W))})
    if (!mustvanish.is_zero())
      throw std::logic_error("contracted basis: expected identically zero trace");

  const std::array<ScalarInvariant, 4> base = {{
      {"trT", pm_trace(T), 1, 0},
      {"trT2", pm_trace(T2), 2, 0},
      {"trTS", pm_trace(pm_mul(T, S)), 1, 1},
      {"trT2S", pm_trace(pm_mul(T2, S)), 2, 1},
  }};

  // Candidate terms: symmetric kernel x invariant monomial, total degree one
  // in the gradient and one or two in T.
  std::vector<SymbolicTerm> candidates;
  for (const KernelCandidate& kernel : kernel_candidates(T, S, W)) {
    for (int e0 = 0; e0 <= 2; ++e0)
      for (int e1 = 0; e1 <= 1; ++e1)
        for (int e2 = 0; e2 <= 1; ++e2)
          for (int e3 = 0; e3 <= 1; ++e3) {
            const int t_deg = kernel.t_degree + e0 + 2 * e1 + e2 + 2 * e3;
            const int u_deg = kernel.u_degree + e2 + e3;
            if (u_deg != 1 || t_deg < 1 || t_deg > 2) continue;

            Poly inv = Poly(1);
            std::string inv_name;
            const int exps[4] = {e0, e1, e2, e3};
            for (int b = 0; b < 4; ++b)
              for (int rep = 0; rep < exps[b]; ++rep) inv *= base[static_cast<std::size_t>(b)].value;
            if (e0 == 2) inv_name = "trT_sq";
            else if (e0 == 1) inv_name = "trT";
            for (int b = 1; b < 4; ++b)
              if (exps[b]) inv_name += std::string(inv_name.empty() ? "" : ".") + base[static_cast<std::size_t>(b)].name;
            if (inv_name.empty()) inv_name = "1";

            SymbolicTerm st;
            st.term.id = kernel.name + "." + inv_name;
            st.term.word = kernel.word;
            st.term.add_transpose = kernel.add_transpose;
            st.term.invariant_exponents = {e0, e1, e2, e3};
            st.term.t_degree = t_deg;
            for (std::size_t e = 0; e < 9; ++e) st.value[e] = kernel.value[e] * inv;
            if (pm_is_zero(st.value)) continue;
            candidates.push_back(std::move(st));
          }
  }

  // The grammar must land exactly on the canonical list.
  constexpr std::size_t kAll = std::size(kCanonicalTermOrder);
  if (candidates.size() != kAll)
    throw std::logic_error("contracted basis: unexpected candidate count");
  std::vector<SymbolicTerm> ordered(kAll);
  for (auto& c : candidates) {
    const auto* pos = std::find_if(std::begin(kCanonicalTermOrder), std::end(kCanonicalTermOrder),
                                   [&](const char* id) { return c.term.id == id; });
    if (pos == std::end(kCanonicalTermOrder))
      throw std::logic_error("contracted basis: derived term outside the canonical list: " + c.term.id);
    ordered[static_cast<std::size_t>(pos - std::begin(kCanonicalTermOrder))] = std::move(c);
  }

  // Shared dense coordinates for every exact solve below.
  const auto& model_basis = RepresentationBasis::standard();
  const std::vector<Poly> T_entries(T.begin(), T.end());
  std::vector<PolyMat> shape_values;
  for (const auto* terms : {&model_basis.linear_terms(), &model_basis.quadratic_terms()})
    for (const TermShape& shape : *terms)
      shape_values.push_back(contracted_shape_value(shape, T_entries, U));

  ColumnIndex cols;
  for (const auto& st : ordered) collect_columns(st.value, cols);
  for (const auto& pv : shape_values) collect_columns(pv, cols);

  RationalMatrix basis_rows;
  for (std::size_t t = 0; t < kTermCount; ++t)
    basis_rows.append_row(vectorize(ordered[t].value, cols));
  if (rank(basis_rows) != kTermCount)
    throw std::logic_error("contracted basis: the 13 retained terms are not independent");

  const SpanSolve tst = solve_in_span(vectorize(ordered[kTermCount].value, cols), basis_rows);
  if (!tst.in_span)
    throw std::logic_error("contracted basis: TST does not reduce over the retained terms");
  tst_reduction_ = tst.coeffs;

  map_ = RationalMatrix(kTermCount, shape_values.size());
  for (std::size_t s = 0; s < shape_values.size(); ++s) {
    const SpanSolve sol = solve_in_span(vectorize(shape_values[s], cols), basis_rows);
    if (!sol.in_span)
      throw std::logic_error("contracted basis: shape image escapes the contracted span");
    for (std::size_t t = 0; t < kTermCount; ++t) map_.at(t, s) = sol.coeffs[t];
  }

  for (std::size_t t = 0; t < kTermCount; ++t) terms_.push_back(ordered[t].term);
}

const ContractedBasis& ContractedBasis::standard() {
  static const ContractedBasis basis;
  return basis;
}

std::vector<ContractedTerm> derive_contracted_terms() {
  return ContractedBasis::standard().terms();
}

ClosureCoefficients map_coefficients(const RepresentationModel& model) {
  const auto& cb = ContractedBasis::standard();
  const auto& basis = RepresentationBasis::standard();
  if (model.linear.size() != basis.linear_terms().size() ||
      model.quadratic.size() != basis.quadratic_terms().size())
    throw std::invalid_argument("map_coefficients: model must carry 9 + 19 coefficients");
  std::vector<Rational> stacked;
  stacked.reserve(model.linear.size() + model.quadratic.size());
  stacked.insert(stacked.end(), model.linear.begin(), model.linear.end());
  stacked.insert(stacked.end(), model.quadratic.begin(), model.quadratic.end());
  ClosureCoefficients out = ClosureCoefficients::zero();
  for (std::size_t t = 0; t < out.a.size(); ++t)
    for (std::size_t c = 0; c < stacked.size(); ++c)
      out.a[t] += cb.coefficient_map().at(t, c) * stacked[c];
  return out;
}

DenseTensor evaluate_closure(const ClosureCoefficients& coeffs, const ReynoldsStress& stress,
                             const VelocityGradient& gradient, bool strict) {
  const auto& cb = ContractedBasis::standard();
  if (coeffs.a.size() != cb.terms().size())
    throw std::invalid_argument("evaluate_closure: expected 13 coefficients");
  if (gradient.U.dim() != 3 || gradient.U.order() != 2)
    throw std::invalid_argument("evaluate_closure: 3x3 velocity gradient required");
  if (strict && !gradient.incompressible())
    throw CompressibleInputError("evaluate_closure: tr U != 0; deviatorize explicitly or disable strict mode");
  DenseTensor out(3, 2);
  for (std::size_t t = 0; t < coeffs.a.size(); ++t)
    if (!coeffs.a[t].is_zero())
      out += coeffs.a[t] * cb.terms()[t].evaluate(stress.T, gradient.S, gradient.W);
  return out;
}

DenseTensor verify_rivlin_identity(const DenseTensor& T, const DenseTensor& S, bool strict) {
  require_symmetric_d3(T, "verify_rivlin_identity");
  require_symmetric_d3(S, "verify_rivlin_identity");
  if (strict && !trace(S).is_zero())
    throw std::invalid_argument("verify_rivlin_identity: tr S != 0 in strict mode");

  const DenseTensor I = DenseTensor::identity(3);
  const DenseTensor TS = matmul(T, S);
  const DenseTensor ST = matmul(S, T);
  const DenseTensor T2 = matmul(T, T);
  const TraceInvariants ti = trace_invariants(T);
  const Rational trTS = trace(TS);
  const Rational trT2S = trace(matmul(T2, S));
  const Rational two(2);

  DenseTensor r = two * matmul(TS, T);
  r += two * (matmul(T2, S) + matmul(S, T2));
  r -= two * ti.trT * (TS + ST);
  r -= two * trTS * T;
  r -= ti.trT2 * S;
  r += ti.trT_squared * S;
  r += two * (ti.trT * trTS) * I;
  r -= two * trT2S * I;
  return r;
}

DualPathResult dual_path_check(const RepresentationModel& model, const DenseTensor& T,
                               const DenseTensor& U) {
  require_symmetric_d3(T, "dual_path_check");
  if (!trace(U).is_zero())
    throw CompressibleInputError("dual_path_check: tr U != 0");

  const DenseTensor B = symmetrize_pair(evaluate_representation(model, T), {0, 1});
  DenseTensor lhs(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational acc;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc += B.at({i, j, k, l}) * U.at({k, l});
      lhs.at({i, j}) = std::move(acc);
    }

  const DenseTensor rhs = evaluate_closure(map_coefficients(model), ReynoldsStress::from_tensor(T),
                                           VelocityGradient::from_tensor(U));
  const bool equal = lhs == rhs;
  return DualPathResult{std::move(lhs), rhs, equal};
}

}  // namespace isotensor
