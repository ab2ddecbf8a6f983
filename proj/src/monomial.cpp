#include "sympow/monomial.hpp"

#include <algorithm>
#include <string>

#include "sympow/term_order.hpp"

namespace sympow {

namespace {

void check_exponent(std::uint64_t e) {
  if (e > Monomial::kMaxExponent) {
    throw ExponentOverflow("monomial exponent " + std::to_string(e) + " exceeds limit " +
                           std::to_string(Monomial::kMaxExponent));
  }
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw InvalidArgument("monomial has more than " + std::to_string(kMaxVariables) +
                          " variables");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_exponent(exponents[i]);
    exps_[i] = exponents[i];
  }
  recompute_degree();
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
  if (index >= kMaxVariables) throw InvalidArgument("variable index out of range");
  check_exponent(power);
  Monomial m;
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

std::uint32_t Monomial::partial_degree(std::size_t first, std::size_t last) const {
  std::uint32_t d = 0;
  for (std::size_t i = first; i < last && i < kMaxVariables; ++i) d += exps_[i];
  return d;
}

void Monomial::recompute_degree() {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  if (d > 0xffffffffULL) throw ExponentOverflow("monomial degree overflow");
  degree_ = static_cast<std::uint32_t>(d);
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  Monomial w;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
    const std::uint64_t e = std::uint64_t{u.exps_[i]} + v.exps_[i];
    check_exponent(e);
    w.exps_[i] = static_cast<std::uint32_t>(e);
  }
  w.recompute_degree();
  return w;
}

Monomial operator/(const Monomial& u, const Monomial& v) {
  if (!v.divides(u)) throw InvalidArgument("monomial quotient is not exact");
  Monomial w;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) w.exps_[i] = u.exps_[i] - v.exps_[i];
  w.degree_ = u.degree_ - v.degree_;
  return w;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  Monomial w;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
    w.exps_[i] = std::max(u.exps_[i], v.exps_[i]);
  }
  w.recompute_degree();
  return w;
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  Monomial w;
  for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
    w.exps_[i] = std::min(u.exps_[i], v.exps_[i]);
  }
  w.recompute_degree();
  return w;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::strong_ordering kLess = std::strong_ordering::less;
constexpr std::strong_ordering kEqual = std::strong_ordering::equal;
constexpr std::strong_ordering kGreater = std::strong_ordering::greater;

// Reverse scan over [first, last): the smaller exponent at the last differing
// position is the larger monomial.
std::strong_ordering reverse_scan(const Monomial& u, const Monomial& v, std::size_t first,
                                  std::size_t last) {
  for (std::size_t i = last; i-- > first;) {
    if (u[i] != v[i]) return u[i] < v[i] ? kGreater : kLess;
  }
  return kEqual;
}

std::strong_ordering by_degree(std::uint32_t du, std::uint32_t dv) {
  if (du != dv) return du < dv ? kLess : kGreater;
  return kEqual;
}

}  // namespace

TermOrder TermOrder::elim(std::uint32_t k) {
  if (k == 0 || k >= Monomial::kMaxVariables) {
    throw InvalidArgument("elimination block size out of range: " + std::to_string(k));
  }
  return TermOrder(Kind::kElim, k);
}

TermOrder TermOrder::graded_elim(std::uint32_t k) {
  return TermOrder(Kind::kGradedElim, elim(k).block());
}

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "grevlex" || name == "dp") return grevlex();
  if (name.rfind("elim:", 0) == 0) {
    try {
      return elim(static_cast<std::uint32_t>(std::stoul(name.substr(5))));
    } catch (const std::logic_error&) {
    }
  }
  if (name.rfind("gelim:", 0) == 0) {
    try {
      return graded_elim(static_cast<std::uint32_t>(std::stoul(name.substr(6))));
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidArgument("unknown term order '" + name + "'");
}

std::strong_ordering TermOrder::compare(const Monomial& u, const Monomial& v) const {
  switch (kind_) {
    case Kind::kLex:
      for (std::size_t i = 0; i < Monomial::kMaxVariables; ++i) {
        if (u[i] != v[i]) return u[i] < v[i] ? kLess : kGreater;
      }
      return kEqual;
    case Kind::kGrevlex:
      if (auto c = by_degree(u.degree(), v.degree()); c != 0) return c;
      return reverse_scan(u, v, 0, Monomial::kMaxVariables);
    case Kind::kGradedElim:
      if (auto c = by_degree(u.partial_degree(block_, Monomial::kMaxVariables),
                             v.partial_degree(block_, Monomial::kMaxVariables));
          c != 0) {
        return c;
      }
      [[fallthrough]];
    case Kind::kElim: {
      if (auto c = by_degree(u.partial_degree(0, block_), v.partial_degree(0, block_)); c != 0) {
        return c;
      }
      if (auto c = reverse_scan(u, v, 0, block_); c != 0) return c;
      const auto rest = Monomial::kMaxVariables;
      if (auto c = by_degree(u.partial_degree(block_, rest), v.partial_degree(block_, rest));
          c != 0) {
        return c;
      }
      return reverse_scan(u, v, block_, rest);
    }
  }
  return kEqual;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::kLex:
      return "lex";
    case Kind::kGrevlex:
      return "grevlex";
    case Kind::kElim:
      return "elim:" + std::to_string(block_);
    case Kind::kGradedElim:
      return "gelim:" + std::to_string(block_);
  }
  return "?";
}

}  // namespace sympow
