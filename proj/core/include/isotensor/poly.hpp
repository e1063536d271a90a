// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "isotensor/rational.hpp"

namespace isotensor {

/// Sparse multivariate polynomial over exact rationals, dense exponent
/// vectors over at most 16 variables. Small and deterministic; used to carry
/// symbolic tensor contractions so that identities can be certified as
/// polynomial identities rather than sampled ones.
class Poly {
 public:
  static constexpr std::size_t kMaxVars = 16;
  using Monomial = std::array<std::uint8_t, kMaxVars>;

  Poly() = default;  // zero
  Poly(long c) { if (c != 0) terms_[Monomial{}] = Rational(c); }  // NOLINT: implicit constant
  Poly(const Rational& c) {  // NOLINT: implicit constant
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }

  static Poly variable(std::size_t var) {
    if (var >= kMaxVars) throw std::invalid_argument("Poly: variable index out of range");
    Poly p;
    Monomial m{};
    m[var] = 1;
    p.terms_[m] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Coefficient of the lexicographically smallest monomial; zero polynomial
  /// yields 0. Used for sign normalization.
  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{};
        for (std::size_t v = 0; v < kMaxVars; ++v) {
          const unsigned e = static_cast<unsigned>(ma[v]) + mb[v];
          if (e > 255) throw std::overflow_error("Poly: exponent overflow");
          m[v] = static_cast<std::uint8_t>(e);
        }
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Debug rendering like "3*x0^2*x4 - 1/2*x7".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (m[v] == 0) continue;
        out += "*x" + std::to_string(v);
        if (m[v] > 1) out += "^" + std::to_string(static_cast<int>(m[v]));
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;  // invariant: no zero coefficients
};

}  // namespace isotensor
