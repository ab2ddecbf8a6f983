#include "sympow/ideal.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "sympow/parallel.hpp"
#include "sympow/row_echelon.hpp"

namespace sympow {

// ---------------------------------------------------------------------------
// Ideal

template <CoefficientField F>
Ideal<F>::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  (void)Poly(ring_);
  std::vector<Poly> monic_seen;
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    Poly m = g.monic();
    if (std::find(monic_seen.begin(), monic_seen.end(), m) != monic_seen.end()) continue;
    monic_seen.push_back(std::move(m));
    generators_.push_back(std::move(g));
  }
}

template <CoefficientField F>
Ideal<F> Ideal<F>::unit(RingPtr ring) {
  auto one = Poly::constant(ring, F::one());
  return Ideal(std::move(ring), {std::move(one)});
}

template <CoefficientField F>
Ideal<F> Ideal<F>::from_basis(std::shared_ptr<const Basis> basis) {
  Ideal ideal(basis->ring(),
              std::vector<Poly>(basis->elements().begin(), basis->elements().end()));
  ideal.cache_->bases.emplace(basis->order(), std::move(basis));
  return ideal;
}

template <CoefficientField F>
bool Ideal<F>::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Poly& g) { return g.is_homogeneous(); });
}

template <CoefficientField F>
std::shared_ptr<const GroebnerBasis<F>> Ideal<F>::groebner_basis(
    TermOrder order, const GroebnerOptions& options) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return it->second;
  }
  auto basis = std::make_shared<const Basis>(buchberger<F>(ring_, generators_, order, options));
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.try_emplace(order, std::move(basis)).first->second;
}

template <CoefficientField F>
std::shared_ptr<const GroebnerBasis<F>> Ideal<F>::any_groebner_basis() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(TermOrder::grevlex()); it != cache_->bases.end()) {
      return it->second;
    }
    if (!cache_->bases.empty()) return cache_->bases.begin()->second;
  }
  return groebner_basis(TermOrder::grevlex());
}

template <CoefficientField F>
bool Ideal<F>::has_cached_basis(TermOrder order) const {
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.contains(order);
}

// ---------------------------------------------------------------------------
// Ideal operations

template <CoefficientField F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial<F>> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.ring(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> ideal_product(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial<F>> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      gens.push_back(f * g.with_order(f.order()));
    }
  }
  return Ideal<F>(a.ring(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> ideal_power(const Ideal<F>& a, unsigned m) {
  if (m == 0) throw InvalidArgument("ideal_power: exponent must be at least 1");
  Ideal<F> result = a;
  for (unsigned k = 1; k < m; ++k) result = ideal_product(result, a);
  return result;
}

namespace {

// Elements of an ELIM(k) or GRADED_ELIM(k) basis free of the first k
// variables, as a reduced GREVLEX basis in `target` (the restricted order is
// GREVLEX there).
template <CoefficientField F>
std::shared_ptr<const GroebnerBasis<F>> eliminated_part(const GroebnerBasis<F>& basis,
                                                        std::size_t k, const RingPtr& target,
                                                        std::span<const std::size_t> var_map) {
  std::vector<Polynomial<F>> kept;
  for (const auto& g : basis.elements()) {
    if (g.involves_variables(0, k)) continue;
    kept.push_back(g.with_order(TermOrder::grevlex()).map_variables(target, var_map));
  }
  std::sort(kept.begin(), kept.end(), [](const auto& f, const auto& g) {
    return TermOrder::grevlex().less(f.leading_monomial(), g.leading_monomial());
  });
  return std::make_shared<const GroebnerBasis<F>>(target, TermOrder::grevlex(),
                                                  std::move(kept));
}

std::string fresh_variable(const Ring& ring) {
  std::string name = "_t";
  for (int i = 1; ring.index_of(name); ++i) name = "_t" + std::to_string(i);
  return name;
}

}  // namespace

template <CoefficientField F>
Ideal<F> eliminate(const Ideal<F>& a, std::size_t k) {
  const std::size_t n = a.ring()->size();
  if (k < 1 || k >= n) {
    throw InvalidArgument("eliminate: k must satisfy 1 <= k < " + std::to_string(n));
  }
  if (a.is_zero()) return Ideal<F>::zero(a.ring());
  const auto basis = a.groebner_basis(TermOrder::elim(static_cast<std::uint32_t>(k)));
  std::vector<std::size_t> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  return Ideal<F>::from_basis(eliminated_part(*basis, k, a.ring(), identity));
}

template <CoefficientField F>
Ideal<F> ideal_intersect(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& options) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal<F>::zero(ring);

  const std::size_t n = ring->size();
  std::vector<std::string> names{fresh_variable(*ring)};
  names.insert(names.end(), ring->variable_names().begin(), ring->variable_names().end());
  const RingPtr extended = Ring::make(std::move(names), ring->field());

  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  std::vector<std::size_t> unshift(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) unshift[i + 1] = i;

  const TermOrder elim = a.is_homogeneous() && b.is_homogeneous() ? TermOrder::graded_elim(1)
                                                                   : TermOrder::elim(1);
  const auto t = Polynomial<F>::variable(extended, 0, elim);
  const auto one_minus_t = Polynomial<F>::constant(extended, F::one(), elim) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) {
    gens.push_back(t * f.with_order(TermOrder::grevlex()).map_variables(extended, shift)
                           .with_order(elim));
  }
  for (const auto& g : b.generators()) {
    gens.push_back(one_minus_t * g.with_order(TermOrder::grevlex())
                                     .map_variables(extended, shift)
                                     .with_order(elim));
  }
  const auto basis = buchberger<F>(extended, gens, elim, options);
  return Ideal<F>::from_basis(eliminated_part(basis, 1, ring, unshift));
}

template <CoefficientField F>
Ideal<F> ideal_intersect_many(std::span<const Ideal<F>> ideals, const GroebnerOptions& options) {
  if (ideals.empty()) throw InvalidArgument("ideal_intersect_many: empty list");
  Ideal<F> acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, ideals[i], options);
  return acc;
}

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& a) {
  require_same_ring(f.ring(), a.ring());
  if (f.is_zero()) return true;
  if (a.is_zero()) return false;
  return normal_form(f, *a.any_groebner_basis()).is_zero();
}

template <CoefficientField F>
std::optional<ContainmentWitness<F>> find_uncontained_generator(const Ideal<F>& a,
                                                                const Ideal<F>& b) {
  require_same_ring(a.ring(), b.ring());
  const auto gens = b.generators();
  if (gens.empty()) return std::nullopt;
  if (a.is_zero()) {
    return ContainmentWitness<F>{gens.front(), gens.front()};
  }
  const auto basis = a.any_groebner_basis();
  std::vector<std::optional<Polynomial<F>>> remainders(gens.size());
  parallel_for(gens.size(), [&](std::size_t i) {
    auto r = normal_form(gens[i], *basis);
    if (!r.is_zero()) remainders[i] = std::move(r);
  });
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (remainders[i]) return ContainmentWitness<F>{gens[i], std::move(*remainders[i])};
  }
  return std::nullopt;
}

template <CoefficientField F>
bool ideal_equals(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return *a.groebner_basis() == *b.groebner_basis();
}

std::vector<Monomial> monomials_of_degree(std::size_t variables, unsigned t) {
  if (variables == 0 || variables > Monomial::kMaxVariables) {
    throw InvalidArgument("monomials_of_degree: bad variable count");
  }
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(variables, 0);
  // Enumerate compositions of t into `variables` parts.
  auto recurse = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == variables) {
      e[i] = left;
      out.emplace_back(std::span<const std::uint32_t>(e));
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  recurse(recurse, 0, t);
  std::sort(out.begin(), out.end(),
            [](const Monomial& u, const Monomial& v) { return TermOrder::grevlex().greater(u, v); });
  return out;
}

namespace {

template <CoefficientField F>
void require_homogeneous(const Ideal<F>& a, const char* op) {
  if (!a.is_homogeneous()) {
    throw InvalidArgument(std::string(op) + " requires a homogeneous ideal");
  }
}

}  // namespace

template <CoefficientField F>
std::size_t graded_dim(const Ideal<F>& a, unsigned t) {
  require_homogeneous(a, "graded_dim");
  if (a.is_zero()) return 0;
  const auto basis = a.groebner_basis();
  const auto monomials = monomials_of_degree(a.ring()->size(), t);
  if (basis->is_unit()) return monomials.size();
  return static_cast<std::size_t>(
      std::count_if(monomials.begin(), monomials.end(), [&](const Monomial& m) {
        return std::any_of(basis->elements().begin(), basis->elements().end(),
                           [&](const auto& g) { return g.leading_monomial().divides(m); });
      }));
}

template <CoefficientField F>
std::vector<Polynomial<F>> graded_piece_basis(const Ideal<F>& a, unsigned t) {
  require_homogeneous(a, "graded_piece_basis");
  const RingPtr& ring = a.ring();
  if (a.is_zero()) return {};
  const auto basis = a.groebner_basis();
  const auto columns = monomials_of_degree(ring->size(), t);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  DenseMatrix<F> rows;
  for (const auto& g : basis->elements()) {
    const int d = g.degree();
    if (d > static_cast<int>(t)) continue;
    for (const auto& m : monomials_of_degree(ring->size(), t - static_cast<unsigned>(d))) {
      std::vector<F> row(columns.size(), F::zero());
      for (const auto& term : g.terms()) row[column_of.at(term.mono * m)] = term.coeff;
      rows.push_back(std::move(row));
    }
  }
  reduce_to_echelon(rows, columns.size());
  std::vector<Polynomial<F>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Term<F>> terms;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!row[c].is_zero()) terms.push_back({columns[c], row[c]});
    }
    out.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
  }
  return out;
}

// ---------------------------------------------------------------------------

template class Ideal<Rational>;
template class Ideal<CycloElement>;

#define SYMPOW_INSTANTIATE_IDEAL(F)                                                          \
  template Ideal<F> ideal_sum<F>(const Ideal<F>&, const Ideal<F>&);                          \
  template Ideal<F> ideal_product<F>(const Ideal<F>&, const Ideal<F>&);                      \
  template Ideal<F> ideal_power<F>(const Ideal<F>&, unsigned);                               \
  template Ideal<F> eliminate<F>(const Ideal<F>&, std::size_t);                              \
  template Ideal<F> ideal_intersect<F>(const Ideal<F>&, const Ideal<F>&,                     \
                                       const GroebnerOptions&);                              \
  template Ideal<F> ideal_intersect_many<F>(std::span<const Ideal<F>>,                       \
                                            const GroebnerOptions&);                         \
  template bool ideal_member<F>(const Polynomial<F>&, const Ideal<F>&);                      \
  template std::optional<ContainmentWitness<F>> find_uncontained_generator<F>(              \
      const Ideal<F>&, const Ideal<F>&);                                                     \
  template bool ideal_equals<F>(const Ideal<F>&, const Ideal<F>&);                           \
  template std::size_t graded_dim<F>(const Ideal<F>&, unsigned);                             \
  template std::vector<Polynomial<F>> graded_piece_basis<F>(const Ideal<F>&, unsigned);

SYMPOW_INSTANTIATE_IDEAL(Rational)
SYMPOW_INSTANTIATE_IDEAL(CycloElement)

#undef SYMPOW_INSTANTIATE_IDEAL

}  // namespace sympow
