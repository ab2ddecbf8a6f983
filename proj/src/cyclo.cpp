#include "sympow/cyclo.hpp"

#include <ostream>

#include "sympow/scalar_format.hpp"

namespace sympow {

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  // (a1 + b1 w)(a2 + b2 w) = a1a2 + (a1b2 + a2b1) w + b1b2 w^2, w^2 = -1 - w.
  const Rational bb = b_ * o.b_;
  Rational a = a_ * o.a_ - bb;
  Rational b = a_ * o.b_ + o.a_ * b_ - bb;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (b_.is_zero()) return {a_.inverse()};
  // x * conj(x) = norm(x), a rational.
  const Rational n = norm();
  const CycloElement c = conjugate();
  return {c.a_ / n, c.b_ / n};
}

std::ostream& operator<<(std::ostream& os, const CycloElement& x) {
  return os << format_scalar(x);
}

}  // namespace sympow
