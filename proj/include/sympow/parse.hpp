#pragma once

#include <string>
#include <string_view>

#include "sympow/polynomial.hpp"
#include "sympow/scalar_format.hpp"

namespace sympow {

// Text grammar for field elements and polynomials:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*      divisor must be a nonzero constant
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | IDENT | '(' expr ')'
//
// IDENT is a ring variable or `w` (a primitive cube root of unity, only over
// Q(w)). Juxtaposition such as `2x` or `x y` is rejected.

/// Parses a constant expression (no ring variables).
template <CoefficientField F>
F parse_scalar(std::string_view text);

template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr& ring, std::string_view text,
                               TermOrder order = TermOrder::grevlex());

/// Inverse of parse_polynomial: terms in descending order, e.g.
/// `x^6*y^3 - x^3*y^6 - x^6*z^3 + y^6*z^3 + x^3*z^6 - y^3*z^6`.
template <CoefficientField F>
std::string format_polynomial(const Polynomial<F>& f);

std::string format_monomial(const Ring& ring, const Monomial& m);

/// True iff `text` contains the identifier `w`.
bool mentions_omega(std::string_view text);

}  // namespace sympow
