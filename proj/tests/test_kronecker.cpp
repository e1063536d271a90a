// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isotensor/kronecker.hpp"
#include "isotensor/rational_matrix.hpp"
#include "isotensor/rng.hpp"

using namespace isotensor;

namespace {

// All ways to split the 8 slots into a 4-row / 4-column determinant, up to
// the symmetries that only flip sign or transpose: fix slot 0 in the rows
// and keep both label lists ascending.
std::vector<GenKroneckerSpec> representative_k4_specs() {
  std::vector<GenKroneckerSpec> out;
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4 || !(mask & 1)) continue;
    std::vector<int> upper, lower;
    for (int s = 0; s < 8; ++s) ((mask >> s) & 1 ? upper : lower).push_back(s);
    out.push_back(GenKroneckerSpec::make(upper, lower));
  }
  return out;
}

DenseTensor eval_isomer_combination(const std::vector<Rational>& coeffs, const IsomerSet& set,
                                    int dim) {
  DenseTensor sum(dim, set.order);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) sum += coeffs[i] * evaluate_isomer(set.isomers[i], dim);
  return sum;
}

DenseTensor contract_combination_with_TT(const std::vector<Rational>& coeffs, const IsomerSet& set,
                                         const DenseTensor& T) {
  DenseTensor sum(T.dim(), 4);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) sum += coeffs[i] * apply_isomer(set.isomers[i], {T, T});
  return sum;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(GenKroneckerSpec::make({0, 1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(GenKroneckerSpec::make({0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(GenKroneckerSpec::make({0, 1, 2}, {2, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(GenKroneckerSpec::make({0, 1, 2}, {3, 4, 6}), std::invalid_argument);
  CHECK_NOTHROW(GenKroneckerSpec::make({0, 1, 2}, {3, 4, 5}));
}

TEST_CASE("k=2 expansion: d_ij d_kl - d_il d_kj") {
  const GenKroneckerSpec spec = GenKroneckerSpec::make({0, 2}, {1, 3});
  const DenseTensor g = gen_kronecker(spec, 3);
  CHECK(g.at({0, 0, 1, 1}) == Rational(1));
  CHECK(g.at({0, 1, 1, 0}) == Rational(-1));
  CHECK(g.at({0, 0, 0, 0}) == Rational(0));

  // against the two-isomer combination with explicit signs
  const IsomerSet set4 = enumerate_isomers(4);
  const auto coeffs = expand_as_isomer_combination(spec, set4);
  int plus = 0, minus = 0, zero = 0;
  for (const auto& c : coeffs) {
    if (c == Rational(1)) ++plus;
    else if (c == Rational(-1)) ++minus;
    else ++zero;
  }
  CHECK(plus == 1);
  CHECK(minus == 1);
  CHECK(zero == 1);
  CHECK(eval_isomer_combination(coeffs, set4, 3) == g);
}

TEST_CASE("vanishing at k = dim + 1") {
  CHECK(gen_kronecker(GenKroneckerSpec::alternating(), 3).is_zero());       // 4x4 in d=3
  CHECK(gen_kronecker(GenKroneckerSpec::front_paired(), 3).is_zero());
  CHECK(gen_kronecker(GenKroneckerSpec::make({0, 1, 2}, {3, 4, 5}), 2).is_zero());  // 3x3 in d=2
  CHECK_FALSE(gen_kronecker(GenKroneckerSpec::alternating(), 4).is_zero());
  CHECK_FALSE(gen_kronecker(GenKroneckerSpec::make({0, 1, 2}, {3, 4, 5}), 3).is_zero());
}

TEST_CASE("antisymmetry under slot exchange, brute force for k <= 3") {
  for (int dim : {2, 3}) {
    const DenseTensor g = gen_kronecker(GenKroneckerSpec::make({0, 1, 2}, {3, 4, 5}), dim);
    // swapping any two upper labels or any two lower labels flips the sign
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        std::vector<int> upper{0, 1, 2}, lower{3, 4, 5};
        std::swap(upper[static_cast<std::size_t>(a)], upper[static_cast<std::size_t>(b)]);
        CHECK(gen_kronecker(GenKroneckerSpec::make(upper, {3, 4, 5}), dim) == -g);
        std::swap(lower[static_cast<std::size_t>(a)], lower[static_cast<std::size_t>(b)]);
        CHECK(gen_kronecker(GenKroneckerSpec::make({0, 1, 2}, lower), dim) == -g);
      }
  }
  const DenseTensor g2 = gen_kronecker(GenKroneckerSpec::make({0, 2}, {1, 3}), 3);
  CHECK(gen_kronecker(GenKroneckerSpec::make({2, 0}, {1, 3}), 3) == -g2);
  CHECK(gen_kronecker(GenKroneckerSpec::make({0, 2}, {3, 1}), 3) == -g2);
}

TEST_CASE("isomer combination evaluates to the determinant") {
  const IsomerSet set8 = enumerate_isomers(8);
  for (const GenKroneckerSpec& spec :
       {GenKroneckerSpec::alternating(), GenKroneckerSpec::front_paired()}) {
    const auto coeffs = expand_as_isomer_combination(spec, set8);
    int nonzero = 0;
    for (const auto& c : coeffs) {
      if (c.is_zero()) continue;
      ++nonzero;
      CHECK((c == Rational(1) || c == Rational(-1)));
    }
    CHECK(nonzero == 24);
    for (int dim : {2, 3, 4})
      CHECK(eval_isomer_combination(coeffs, set8, dim) == gen_kronecker(spec, dim));
  }
}

TEST_CASE("contraction with T(x)T vanishes in three dimensions") {
  const auto check_zero = [](const DenseTensor& T) {
    CHECK(contract_with_TT(GenKroneckerSpec::alternating(), T).is_zero());
    CHECK(contract_with_TT(GenKroneckerSpec::front_paired(), T).is_zero());
  };
  check_zero(DenseTensor::identity(3));
  check_zero(DenseTensor(3, 2));
  check_zero(DenseTensor::diagonal({Rational(1), Rational(2), Rational(3)}));
  SplitMix64 rng(41);
  for (int t = 0; t < 5; ++t) check_zero(random_symmetric(rng));

  DenseTensor skew(3, 2);
  skew.at({0, 1}) = 1;
  CHECK_THROWS_AS(contract_with_TT(GenKroneckerSpec::alternating(), skew), std::invalid_argument);
}

TEST_CASE("grouped expansions are identically zero in d=3") {
  SplitMix64 rng(43);
  std::vector<DenseTensor> samples{DenseTensor(3, 2), DenseTensor::identity(3),
                                   DenseTensor::diagonal({Rational(1), Rational(1), Rational(2)})};
  for (int t = 0; t < 20; ++t) samples.push_back(random_symmetric(rng));
  for (const auto& T : samples) {
    CHECK(grouped_expansion(QuadIdentity::AlternatingSlots, T).is_zero());
    CHECK(grouped_expansion(QuadIdentity::FrontPairedSlots, T).is_zero());
    CHECK(verify_grouped_expansion(QuadIdentity::AlternatingSlots, T).is_zero());
    CHECK(verify_grouped_expansion(QuadIdentity::FrontPairedSlots, T).is_zero());
  }
}

TEST_CASE("the grouping is real algebra: it matches the determinant in d=4 too") {
  // In four dimensions neither side vanishes, so agreement actually pins the
  // grouped coefficients against the signed-permutation expansion.
  const IsomerSet set8 = enumerate_isomers(8);
  SplitMix64 rng(47);
  for (int t = 0; t < 3; ++t) {
    const DenseTensor T = random_symmetric(rng, 4);
    const auto alternating = expand_as_isomer_combination(GenKroneckerSpec::alternating(), set8);
    const auto front = expand_as_isomer_combination(GenKroneckerSpec::front_paired(), set8);
    const DenseTensor lhs_a = contract_combination_with_TT(alternating, set8, T);
    const DenseTensor lhs_f = contract_combination_with_TT(front, set8, T);
    CHECK_FALSE(lhs_a.is_zero());
    CHECK_FALSE(lhs_f.is_zero());
    CHECK(lhs_a == grouped_expansion(QuadIdentity::AlternatingSlots, T));
    CHECK(lhs_f == grouped_expansion(QuadIdentity::FrontPairedSlots, T));
  }
}

TEST_CASE("every k=4 determinant vector lies in the order-8 nullspace and they span it") {
  const IsomerSet set8 = enumerate_isomers(8);

  // membership: v . M = 0 componentwise, i.e. the combination evaluates to zero
  RationalMatrix vectors;
  for (const auto& spec : representative_k4_specs()) {
    const auto coeffs = expand_as_isomer_combination(spec, set8);
    CHECK(eval_isomer_combination(coeffs, set8, 3).is_zero());
    vectors.append_row(coeffs);
  }
  CHECK(vectors.rows() == 35);  // C(8,4)/2 slot splits
  CHECK(rank(vectors) == 14);   // exactly the nullity of the isomer matrix
}
