// Copyright 2026 The isotensor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace isotensor {

/// Exact rational scalar: arbitrary-precision numerator over a positive
/// arbitrary-precision denominator, always kept in lowest terms. This is the
/// only scalar type the tensor layer computes with; nothing here ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}    // NOLINT: implicit by design, lets literals mix in
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(mpz_class n, mpz_class d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(std::move(n), std::move(d));
    v_.canonicalize();
  }
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with optional leading '-'. Rejects whitespace,
  /// empty fields, and zero denominators.
  static Rational parse(std::string_view text);

  /// Canonical textual form, "p" or "p/q" with q > 1.
  std::string str() const { return v_.get_str(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

 private:
  mpq_class v_;  // invariant: canonical (lowest terms, positive denominator)
};

inline Rational Rational::parse(std::string_view text) {
  // GMP's own string parser ignores whitespace, which is too lax for a wire
  // format; validate the shape strictly first.
  auto valid_int = [](std::string_view s) {
    if (s.starts_with('-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid_int(den)) throw std::invalid_argument("Rational: bad denominator in '" + std::string(text) + "'");
  }
  if (!valid_int(num)) throw std::invalid_argument("Rational: bad numerator in '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  return Rational(std::move(n), std::move(d));
}

}  // namespace isotensor
