#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sympow/monomial.hpp"

namespace sympow {

/// Monomial order. GREVLEX: higher total degree wins, ties go to the monomial
/// with the smaller exponent at the last variable where the two differ.
/// ELIM(k): block order, GREVLEX on the first k variables, ties broken by
/// GREVLEX on the remaining ones.
/// GRADED_ELIM(k): total degree in the last variables first, then ELIM(k).
/// On ideals homogeneous in the last variables (the first k of weight zero)
/// it eliminates like ELIM(k) while staying degree compatible.
class TermOrder {
 public:
  enum class Kind : std::uint8_t { kLex, kGrevlex, kElim, kGradedElim };

  constexpr TermOrder() = default;

  static constexpr TermOrder lex() { return TermOrder(Kind::kLex, 0); }
  static constexpr TermOrder grevlex() { return TermOrder(Kind::kGrevlex, 0); }
  static TermOrder elim(std::uint32_t k);
  static TermOrder graded_elim(std::uint32_t k);

  /// Parses `lex`, `grevlex` (or `dp`), `elim:K`, `gelim:K`.
  static TermOrder parse(const std::string& name);

  constexpr Kind kind() const { return kind_; }
  constexpr std::uint32_t block() const { return block_; }

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  friend constexpr bool operator==(const TermOrder&, const TermOrder&) = default;
  friend constexpr auto operator<=>(const TermOrder&, const TermOrder&) = default;

  std::string to_string() const;

 private:
  constexpr TermOrder(Kind kind, std::uint32_t block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::kGrevlex;
  std::uint32_t block_ = 0;
};

/// Three-way comparison under `order`; EQ iff u == v.
inline std::strong_ordering order_cmp(const TermOrder& order, const Monomial& u,
                                      const Monomial& v) {
  return order.compare(u, v);
}

}  // namespace sympow
