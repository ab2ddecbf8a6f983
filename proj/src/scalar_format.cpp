#include "sympow/scalar_format.hpp"

namespace sympow {

std::string format_scalar(const Rational& r) { return r.to_string(); }

std::string format_scalar(const CycloElement& x) {
  const Rational& a = x.a();
  const Rational& b = x.b();
  if (b.is_zero()) return a.to_string();

  std::string omega_part;
  if (b.is_one()) {
    omega_part = "w";
  } else if (b == Rational(-1)) {
    omega_part = "-w";
  } else {
    omega_part = b.to_string() + "*w";
  }
  if (a.is_zero()) return omega_part;
  if (omega_part.front() == '-') return a.to_string() + omega_part;
  return a.to_string() + "+" + omega_part;
}

}  // namespace sympow
