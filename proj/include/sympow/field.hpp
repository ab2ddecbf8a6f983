#pragma once

#include <concepts>
#include <cstddef>

#include "sympow/cyclo.hpp"
#include "sympow/rational.hpp"

namespace sympow {

/// Exact coefficient field. Instances: Rational (Q) and CycloElement (Q(w)).
template <class F>
concept CoefficientField =
    std::regular<F> && requires(const F x, const F y, F& z, const Rational& r) {
      { F::kind } -> std::convertible_to<FieldKind>;
      { F::zero() } -> std::same_as<F>;
      { F::one() } -> std::same_as<F>;
      { F::from_rational(r) } -> std::same_as<F>;
      { x + y } -> std::same_as<F>;
      { x - y } -> std::same_as<F>;
      { x * y } -> std::same_as<F>;
      { x / y } -> std::same_as<F>;
      { -x } -> std::same_as<F>;
      { z += x } -> std::same_as<F&>;
      { z -= x } -> std::same_as<F&>;
      { z *= x } -> std::same_as<F&>;
      { x.inverse() } -> std::same_as<F>;
      { x.is_zero() } -> std::same_as<bool>;
      { x.is_one() } -> std::same_as<bool>;
      { x.hash() } -> std::same_as<std::size_t>;
    };

static_assert(CoefficientField<Rational>);
static_assert(CoefficientField<CycloElement>);

constexpr const char* field_name(FieldKind kind) {
  return kind == FieldKind::kRational ? "Q" : "Q(w)";
}

}  // namespace sympow
