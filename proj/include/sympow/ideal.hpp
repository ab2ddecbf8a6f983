#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "sympow/groebner.hpp"

namespace sympow {

/// Finite generator list in a fixed ring with a lazily filled, thread-safe
/// cache of reduced Groebner bases keyed by term order. Generators are
/// nonzero and pairwise non-proportional (duplicates up to a scalar are
/// dropped on construction, first occurrence wins).
template <CoefficientField F>
class Ideal {
 public:
  using Poly = Polynomial<F>;
  using Basis = GroebnerBasis<F>;

  Ideal(RingPtr ring, std::vector<Poly> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// Ideal generated by a reduced basis; the basis seeds the cache.
  static Ideal from_basis(std::shared_ptr<const Basis> basis);

  const RingPtr& ring() const { return ring_; }
  std::span<const Poly> generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_homogeneous() const;

  /// Reduced Groebner basis under `order`, computed at most once per order in
  /// the common case (racing readers may both compute; results are equal).
  std::shared_ptr<const Basis> groebner_basis(TermOrder order = TermOrder::grevlex(),
                                              const GroebnerOptions& options = {}) const;
  /// Any cached basis, falling back to GREVLEX.
  std::shared_ptr<const Basis> any_groebner_basis() const;
  bool has_cached_basis(TermOrder order) const;

  bool is_unit() const { return any_groebner_basis()->is_unit(); }

 private:
  struct Cache {
    mutable std::mutex mutex;
    std::map<TermOrder, std::shared_ptr<const Basis>> bases;
  };

  RingPtr ring_;
  std::vector<Poly> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Generators are the union.
template <CoefficientField F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b);

/// Generators are all pairwise products.
template <CoefficientField F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b);

/// a^m by repeated products; m >= 1.
template <CoefficientField F>
Ideal<F> ideal_power(const Ideal<F>& a, unsigned m);

/// Elimination ideal a ∩ k[x_k, ..., x_{n-1}], computed in the same ring from
/// the ELIM(k) basis; 1 <= k < variable count.
template <CoefficientField F>
Ideal<F> eliminate(const Ideal<F>& a, std::size_t k);

/// a ∩ b as (t*a + (1-t)*b) ∩ k[x], with a fresh variable t eliminated
/// (under GRADED_ELIM(1) when both ideals are homogeneous).
template <CoefficientField F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b,
                         const GroebnerOptions& options = {});

/// Left fold of ideal_intersect over a nonempty list.
template <CoefficientField F>
Ideal<F> ideal_intersect_many(std::span<const Ideal<F>> ideals,
                              const GroebnerOptions& options = {});

/// f in a iff its normal form against a Groebner basis of a vanishes.
template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& a);

template <CoefficientField F>
struct ContainmentWitness {
  Polynomial<F> generator;  ///< generator of the smaller ideal outside the larger
  Polynomial<F> remainder;  ///< its nonzero normal form
};

/// First generator of b (in generator order) not in a, with its remainder.
template <CoefficientField F>
std::optional<ContainmentWitness<F>> find_uncontained_generator(const Ideal<F>& a,
                                                                const Ideal<F>& b);

/// True iff b ⊆ a.
template <CoefficientField F>
bool ideal_contains(const Ideal<F>& a, const Ideal<F>& b) {
  return !find_uncontained_generator(a, b).has_value();
}

/// Identical reduced GREVLEX bases.
template <CoefficientField F>
bool ideal_equals(const Ideal<F>& a, const Ideal<F>& b);

/// Exponent vectors of all monomials of degree t in `variables` variables,
/// in descending GREVLEX order.
std::vector<Monomial> monomials_of_degree(std::size_t variables, unsigned t);

/// dim_k of the degree-t piece of a homogeneous ideal, via standard
/// monomials of its leading-term ideal.
template <CoefficientField F>
std::size_t graded_dim(const Ideal<F>& a, unsigned t);

/// Basis of the degree-t piece in reduced echelon form (monic, distinct
/// leading monomials); its length equals graded_dim(a, t).
template <CoefficientField F>
std::vector<Polynomial<F>> graded_piece_basis(const Ideal<F>& a, unsigned t);

extern template class Ideal<Rational>;
extern template class Ideal<CycloElement>;

}  // namespace sympow
