#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sympow/field.hpp"
#include "sympow/monomial.hpp"
#include "sympow/ring.hpp"
#include "sympow/term_order.hpp"

namespace sympow {

template <CoefficientField F>
struct Term {
  Monomial mono;
  F coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact coefficients. Terms are kept sorted in
/// descending order under the polynomial's term order, with no zero
/// coefficients; the zero polynomial has no terms. Binary operations require
/// both operands in the same ring and under the same order.
template <CoefficientField F>
class Polynomial {
 public:
  using Coefficient = F;
  using TermType = Term<F>;

  /// Zero polynomial.
  explicit Polynomial(RingPtr ring, TermOrder order = TermOrder::grevlex());

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<TermType> terms,
                               TermOrder order = TermOrder::grevlex());
  static Polynomial constant(RingPtr ring, F c, TermOrder order = TermOrder::grevlex());
  static Polynomial term(RingPtr ring, Monomial m, F c = F::one(),
                         TermOrder order = TermOrder::grevlex());
  static Polynomial variable(RingPtr ring, std::size_t index,
                             TermOrder order = TermOrder::grevlex());
  static Polynomial variable(RingPtr ring, std::string_view name,
                             TermOrder order = TermOrder::grevlex());

  const RingPtr& ring() const { return ring_; }
  TermOrder order() const { return order_; }
  std::span<const TermType> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }

  /// Largest term under order(); throws InvalidArgument on zero.
  const TermType& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const F& leading_coeff() const { return leading_term().coeff; }

  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  /// True iff all monomials share one degree (vacuously true for zero).
  bool is_homogeneous() const;
  /// True iff some term has a positive exponent in a variable in [first, last).
  bool involves_variables(std::size_t first, std::size_t last) const;

  /// Same polynomial, re-sorted under `order`.
  Polynomial with_order(TermOrder order) const;
  /// Scaled so the leading coefficient is one (zero stays zero).
  Polynomial monic() const;
  Polynomial scaled(const F& c) const;
  Polynomial times_term(const Monomial& m, const F& c) const;

  /// this -= c * m * g, the elementary reduction step.
  void subtract_multiple(const Polynomial& g, const Monomial& m, const F& c);
  /// Removes and returns the leading term.
  TermType pop_leading_term();
  /// Appends a term smaller than every present term.
  void push_trailing_term(TermType t);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) { return f.multiply(g); }
  Polynomial operator-() const { return scaled(-F::one()); }

  /// Exact evaluation; `point` supplies one value per ring variable.
  F evaluate(std::span<const F> point) const;
  /// Partial derivative with respect to variable `index`.
  Polynomial derivative(std::size_t index) const;
  /// Moves the polynomial into `target`, sending variable i to
  /// `variable_map[i]`.
  Polynomial map_variables(RingPtr target, std::span<const std::size_t> variable_map) const;

  /// Equal as polynomials; term order is ignored.
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
    if (f.order_ == g.order_) return f.terms_ == g.terms_;
    return f.terms_ == g.with_order(f.order_).terms_;
  }

  std::size_t hash() const;

 private:
  Polynomial(RingPtr ring, TermOrder order, std::vector<TermType> sorted_terms)
      : ring_(std::move(ring)), order_(order), terms_(std::move(sorted_terms)) {}

  void require_compatible(const Polynomial& g) const;
  Polynomial multiply(const Polynomial& g) const;
  void add_scaled(const Polynomial& g, const Monomial* m, const F& c);
  static void normalize(std::vector<TermType>& terms, TermOrder order);

  RingPtr ring_;
  TermOrder order_;
  std::vector<TermType> terms_;
};

template <CoefficientField F>
struct PolynomialHash {
  std::size_t operator()(const Polynomial<F>& f) const { return f.hash(); }
};

// ---------------------------------------------------------------------------
// Implementation

namespace detail {
void check_ring_field(const RingPtr& ring, FieldKind kind);
void check_order_fits(const RingPtr& ring, TermOrder order);
}  // namespace detail

template <CoefficientField F>
Polynomial<F>::Polynomial(RingPtr ring, TermOrder order) : ring_(std::move(ring)), order_(order) {
  detail::check_ring_field(ring_, F::kind);
  detail::check_order_fits(ring_, order_);
}

template <CoefficientField F>
void Polynomial<F>::normalize(std::vector<TermType>& terms, TermOrder order) {
  std::sort(terms.begin(), terms.end(), [order](const TermType& a, const TermType& b) {
    return order.greater(a.mono, b.mono);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    F c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (!c.is_zero()) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr ring, std::vector<TermType> terms,
                                        TermOrder order) {
  Polynomial p(std::move(ring), order);
  for (const auto& t : terms) {
    for (std::size_t i = p.ring_->size(); i < Monomial::kMaxVariables; ++i) {
      if (t.mono[i] != 0) throw InvalidArgument("monomial uses a variable outside the ring");
    }
  }
  normalize(terms, order);
  p.terms_ = std::move(terms);
  return p;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::constant(RingPtr ring, F c, TermOrder order) {
  return term(std::move(ring), Monomial(), std::move(c), order);
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::term(RingPtr ring, Monomial m, F c, TermOrder order) {
  std::vector<TermType> terms;
  terms.push_back({std::move(m), std::move(c)});
  return from_terms(std::move(ring), std::move(terms), order);
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::variable(RingPtr ring, std::size_t index, TermOrder order) {
  if (index >= ring->size()) throw InvalidArgument("variable index out of range");
  return term(std::move(ring), Monomial::variable(index), F::one(), order);
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::variable(RingPtr ring, std::string_view name, TermOrder order) {
  const auto index = ring->index_of(name);
  if (!index) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *index, order);
}

template <CoefficientField F>
const typename Polynomial<F>::TermType& Polynomial<F>::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

template <CoefficientField F>
int Polynomial<F>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

template <CoefficientField F>
bool Polynomial<F>::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [this](const TermType& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

template <CoefficientField F>
bool Polynomial<F>::involves_variables(std::size_t first, std::size_t last) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const TermType& t) {
    return t.mono.partial_degree(first, last) > 0;
  });
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::with_order(TermOrder order) const {
  if (order == order_) return *this;
  detail::check_order_fits(ring_, order);
  std::vector<TermType> terms = terms_;
  std::sort(terms.begin(), terms.end(), [order](const TermType& a, const TermType& b) {
    return order.greater(a.mono, b.mono);
  });
  return Polynomial(ring_, order, std::move(terms));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::scaled(const F& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<TermType> terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return Polynomial(ring_, order_, std::move(terms));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::times_term(const Monomial& m, const F& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  std::vector<TermType> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.mono * m, t.coeff * c});
  return Polynomial(ring_, order_, std::move(terms));
}

template <CoefficientField F>
void Polynomial<F>::require_compatible(const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  if (order_ != g.order_) {
    throw OrderMismatch("term order mismatch: " + order_.to_string() + " vs " +
                        g.order_.to_string());
  }
}

// this += c * m * g (m == nullptr means m = 1), by a single merge pass.
template <CoefficientField F>
void Polynomial<F>::add_scaled(const Polynomial& g, const Monomial* m, const F& c) {
  require_compatible(g);
  if (g.terms_.empty() || c.is_zero()) return;
  if (&g == this) {
    const Polynomial copy = g;
    add_scaled(copy, m, c);
    return;
  }
  std::vector<TermType> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  const auto end = terms_.end();
  for (const auto& gt : g.terms_) {
    Monomial gm = m ? gt.mono * *m : gt.mono;
    while (it != end && order_.greater(it->mono, gm)) out.push_back(std::move(*it++));
    F gc = gt.coeff * c;
    if (it != end && it->mono == gm) {
      gc += it->coeff;
      ++it;
      if (gc.is_zero()) continue;
    }
    out.push_back({std::move(gm), std::move(gc)});
  }
  while (it != end) out.push_back(std::move(*it++));
  terms_ = std::move(out);
}

template <CoefficientField F>
void Polynomial<F>::subtract_multiple(const Polynomial& g, const Monomial& m, const F& c) {
  add_scaled(g, &m, -c);
}

template <CoefficientField F>
typename Polynomial<F>::TermType Polynomial<F>::pop_leading_term() {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  TermType t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

template <CoefficientField F>
void Polynomial<F>::push_trailing_term(TermType t) {
  if (t.coeff.is_zero()) return;
  if (!terms_.empty() && !order_.greater(terms_.back().mono, t.mono)) {
    throw InvalidArgument("push_trailing_term: term is not smaller than the tail");
  }
  terms_.push_back(std::move(t));
}

template <CoefficientField F>
Polynomial<F>& Polynomial<F>::operator+=(const Polynomial& g) {
  add_scaled(g, nullptr, F::one());
  return *this;
}

template <CoefficientField F>
Polynomial<F>& Polynomial<F>::operator-=(const Polynomial& g) {
  add_scaled(g, nullptr, -F::one());
  return *this;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::multiply(const Polynomial& g) const {
  require_compatible(g);
  if (terms_.empty() || g.terms_.empty()) return Polynomial(ring_, order_);
  std::vector<TermType> terms;
  terms.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) terms.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  normalize(terms, order_);
  return Polynomial(ring_, order_, std::move(terms));
}

template <CoefficientField F>
F Polynomial<F>::evaluate(std::span<const F> point) const {
  const std::size_t n = ring_->size();
  if (point.size() != n) {
    throw InvalidArgument("evaluation point has " + std::to_string(point.size()) +
                          " coordinates, ring has " + std::to_string(n) + " variables");
  }
  std::vector<std::vector<F>> powers(n, std::vector<F>{F::one()});
  F sum = F::zero();
  for (const auto& t : terms_) {
    F value = t.coeff;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      auto& table = powers[i];
      while (table.size() <= e) table.push_back(table.back() * point[i]);
      value *= table[e];
    }
    sum += value;
  }
  return sum;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::derivative(std::size_t index) const {
  if (index >= ring_->size()) throw InvalidArgument("variable index out of range");
  std::vector<TermType> terms;
  const Monomial x = Monomial::variable(index);
  for (const auto& t : terms_) {
    const std::uint32_t e = t.mono[index];
    if (e == 0) continue;
    terms.push_back({t.mono / x, t.coeff * F(static_cast<long>(e))});
  }
  // Lowering one exponent can reorder terms under grevlex-type orders.
  normalize(terms, order_);
  return Polynomial(ring_, order_, std::move(terms));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::map_variables(RingPtr target,
                                           std::span<const std::size_t> variable_map) const {
  if (variable_map.size() != ring_->size()) {
    throw InvalidArgument("variable map size does not match the ring");
  }
  for (auto v : variable_map) {
    if (v >= target->size()) throw InvalidArgument("variable map target out of range");
  }
  detail::check_order_fits(target, order_);
  std::vector<TermType> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::array<std::uint32_t, Monomial::kMaxVariables> e{};
    for (std::size_t i = 0; i < variable_map.size(); ++i) e[variable_map[i]] += t.mono[i];
    terms.push_back({Monomial(std::span<const std::uint32_t>(e)), t.coeff});
  }
  return from_terms(std::move(target), std::move(terms), order_);
}

template <CoefficientField F>
std::size_t Polynomial<F>::hash() const {
  // Order-independent so that equal polynomials hash equally.
  std::size_t h = terms_.size();
  for (const auto& t : terms_) h += t.mono.hash() * 0x9e3779b97f4a7c15ULL ^ t.coeff.hash();
  return h;
}

extern template class Polynomial<Rational>;
extern template class Polynomial<CycloElement>;

}  // namespace sympow
