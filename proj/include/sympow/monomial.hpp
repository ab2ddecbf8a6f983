#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "sympow/error.hpp"

namespace sympow {

/// Dense exponent vector. Slots past the ring's variable count stay zero, so
/// comparisons and divisibility never need the ring size.
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 8;
  static constexpr std::uint32_t kMaxExponent = 1u << 24;

  Monomial() = default;
  Monomial(std::initializer_list<std::uint32_t> exponents);
  explicit Monomial(std::span<const std::uint32_t> exponents);

  static Monomial variable(std::size_t index, std::uint32_t power = 1);

  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::array<std::uint32_t, kMaxVariables>& exponents() const { return exps_; }

  /// Sum of exponents in [first, last).
  std::uint32_t partial_degree(std::size_t first, std::size_t last) const;

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& u, const Monomial& v);
  /// Exact quotient; requires v | u.
  friend Monomial operator/(const Monomial& u, const Monomial& v);
  friend Monomial lcm(const Monomial& u, const Monomial& v);
  friend Monomial gcd(const Monomial& u, const Monomial& v);

  friend bool operator==(const Monomial& u, const Monomial& v) {
    return u.degree_ == v.degree_ && u.exps_ == v.exps_;
  }

  std::size_t hash() const;

 private:
  void recompute_degree();

  std::array<std::uint32_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace sympow
