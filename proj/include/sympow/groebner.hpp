#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow {

enum class SelectionStrategy {
  kNormal,  ///< smallest lcm of the leading monomials first
  kSugar,   ///< smallest sugar degree first, lcm as tie-break
};

struct GroebnerOptions {
  bool product_criterion = true;
  bool chain_criterion = true;
  SelectionStrategy strategy = SelectionStrategy::kNormal;
  /// Abort with DegreeLimitExceeded once a new basis element exceeds this.
  std::optional<int> max_degree;
};

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis: monic elements, no monomial of one element is
/// divisible by the leading monomial of another, sorted by ascending leading
/// monomial. Two reduced bases of one ideal under one order are identical.
template <CoefficientField F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, TermOrder order, std::vector<Polynomial<F>> elements,
                GroebnerStats stats = {})
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)), stats_(stats) {}

  const RingPtr& ring() const { return ring_; }
  TermOrder order() const { return order_; }
  std::span<const Polynomial<F>> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Polynomial<F>& operator[](std::size_t i) const { return elements_[i]; }
  bool is_zero_ideal() const { return elements_.empty(); }
  bool is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }
  const GroebnerStats& stats() const { return stats_; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<Polynomial<F>> elements_;
  GroebnerStats stats_;
};

/// (L/lt(f))*f - (L/lt(g))*g with L the lcm of the leading monomials.
template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, TermOrder order);

/// Full reduction of f modulo `basis`. The result has no monomial divisible
/// by a leading monomial of the basis; over a Groebner basis it is zero iff
/// f lies in the ideal. An empty basis returns f.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis,
                          TermOrder order);

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& basis) {
  return normal_form(f, basis.elements(), basis.order());
}

/// Buchberger's algorithm with the Gebauer-Moeller pair update (product and
/// chain criteria). Zero generators are ignored; an all-zero input yields the
/// empty basis of the zero ideal.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr& ring, std::span<const Polynomial<F>> generators,
                            TermOrder order, const GroebnerOptions& options = {});

/// Same, taking the ring from the first generator; `generators` must be
/// nonempty.
template <CoefficientField F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> generators, TermOrder order,
                            const GroebnerOptions& options = {});

/// Buchberger criterion: every S-polynomial of a pair reduces to zero.
template <CoefficientField F>
bool is_groebner(std::span<const Polynomial<F>> basis, TermOrder order);

extern template class GroebnerBasis<Rational>;
extern template class GroebnerBasis<CycloElement>;

}  // namespace sympow
