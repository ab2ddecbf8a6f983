#pragma once

#include <string>

#include "sympow/cyclo.hpp"
#include "sympow/rational.hpp"

namespace sympow {

// Field elements in the text grammar: `3`, `-2/5`, `w`, `-1-w`, `2/3*w`.
std::string format_scalar(const Rational& r);
std::string format_scalar(const CycloElement& x);

/// True when the printed form is a sum and must be parenthesized as a factor.
inline bool is_compound(const Rational&) { return false; }
inline bool is_compound(const CycloElement& x) { return !x.a().is_zero() && !x.b().is_zero(); }

}  // namespace sympow
