#pragma once

#include <iosfwd>
#include <string>

#include "sympow/rational.hpp"

namespace sympow {

/// Element a + b*w of Q(w), where w is a primitive cube root of unity
/// (w^2 + w + 1 = 0). {1, w} is a basis, so the pair (a, b) is canonical.
class CycloElement {
 public:
  static constexpr FieldKind kind = FieldKind::kCyclotomic3;

  CycloElement() = default;
  CycloElement(long value) : a_(value) {}  // NOLINT: implicit from integers
  CycloElement(Rational a) : a_(std::move(a)) {}  // NOLINT: Q embeds in Q(w)
  CycloElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycloElement zero() { return {}; }
  static CycloElement one() { return {1}; }
  static CycloElement omega() { return {0, 1}; }
  /// w^2 = -1 - w.
  static CycloElement omega_squared() { return {-1, -1}; }
  static CycloElement from_rational(const Rational& r) { return {r}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_.is_one(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Field norm a^2 - ab + b^2; zero only at 0.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  /// Complex conjugation w -> w^2 = -1 - w.
  CycloElement conjugate() const { return {a_ - b_, -b_}; }
  CycloElement inverse() const;

  CycloElement& operator+=(const CycloElement& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  CycloElement& operator-=(const CycloElement& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  CycloElement& operator*=(const CycloElement& o);
  CycloElement& operator/=(const CycloElement& o) { return *this *= o.inverse(); }

  friend CycloElement operator+(CycloElement x, const CycloElement& y) { return x += y; }
  friend CycloElement operator-(CycloElement x, const CycloElement& y) { return x -= y; }
  friend CycloElement operator*(CycloElement x, const CycloElement& y) { return x *= y; }
  friend CycloElement operator/(CycloElement x, const CycloElement& y) { return x /= y; }
  CycloElement operator-() const { return {-a_, -b_}; }

  friend bool operator==(const CycloElement&, const CycloElement&) = default;

  std::size_t hash() const { return a_.hash() * 31u + b_.hash(); }

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const CycloElement& x);

}  // namespace sympow
