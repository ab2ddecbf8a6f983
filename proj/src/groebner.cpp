#include "sympow/groebner.hpp"

#include <algorithm>
#include <string>

namespace sympow {

namespace {

template <CoefficientField F>
std::vector<Polynomial<F>> in_order(std::span<const Polynomial<F>> polys, TermOrder order) {
  std::vector<Polynomial<F>> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.with_order(order));
  return out;
}

// Index of the first basis element whose leading monomial divides m.
template <CoefficientField F>
const Polynomial<F>* find_divisor(const Monomial& m, std::span<const Polynomial<F>> basis) {
  for (const auto& g : basis) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

template <CoefficientField F>
Polynomial<F> reduce_fully(Polynomial<F> p, std::span<const Polynomial<F>> basis) {
  Polynomial<F> remainder(p.ring(), p.order());
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    if (const auto* g = find_divisor<F>(lt.mono, basis)) {
      const F c = lt.coeff / g->leading_coeff();
      p.subtract_multiple(*g, lt.mono / g->leading_monomial(), c);
    } else {
      remainder.push_trailing_term(p.pop_leading_term());
    }
  }
  return remainder;
}

}  // namespace

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, TermOrder order) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of a zero polynomial");
  require_same_ring(f.ring(), g.ring());
  const Polynomial<F> fo = f.with_order(order);
  const Polynomial<F> go = g.with_order(order);
  const Monomial l = lcm(fo.leading_monomial(), go.leading_monomial());
  Polynomial<F> s = fo.times_term(l / fo.leading_monomial(), fo.leading_coeff().inverse());
  s.subtract_multiple(go, l / go.leading_monomial(), go.leading_coeff().inverse());
  return s;
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> basis,
                          TermOrder order) {
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw InvalidArgument("normal_form: zero basis element");
  }
  const bool sorted = std::all_of(basis.begin(), basis.end(),
                                  [order](const auto& g) { return g.order() == order; });
  if (sorted) return reduce_fully<F>(f.with_order(order), basis);
  const auto converted = in_order(basis, order);
  return reduce_fully<F>(f.with_order(order), converted);
}

namespace {

template <CoefficientField F>
class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr ring, TermOrder order, const GroebnerOptions& options)
      : ring_(std::move(ring)), order_(order), options_(options) {}

  GroebnerBasis<F> run(std::span<const Polynomial<F>> generators) {
    for (const auto& f : generators) {
      require_same_ring(ring_, f.ring());
      if (f.is_zero()) continue;
      Polynomial<F> h = f.with_order(order_).monic();
      if (h.is_constant()) return unit_basis();
      const auto sugar = static_cast<unsigned>(h.degree());
      insert(std::move(h), sugar);
    }
    while (!pairs_.empty()) {
      const Pair pair = take_next_pair();
      ++stats_.pairs_reduced;
      Polynomial<F> s = s_polynomial(polys_[pair.i], polys_[pair.j], order_);
      unsigned sugar = pair.sugar;
      Polynomial<F> h = top_reduce(std::move(s), sugar);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      h = h.monic();
      if (h.is_constant()) return unit_basis();
      if (options_.max_degree && h.degree() > *options_.max_degree) {
        throw DegreeLimitExceeded("basis element of degree " + std::to_string(h.degree()) +
                                  " exceeds the cap " + std::to_string(*options_.max_degree));
      }
      insert(std::move(h), sugar);
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
  };

  const Monomial& lm(std::size_t i) const { return polys_[i].leading_monomial(); }

  GroebnerBasis<F> unit_basis() const {
    std::vector<Polynomial<F>> one;
    one.push_back(Polynomial<F>::constant(ring_, F::one(), order_));
    return GroebnerBasis<F>(ring_, order_, std::move(one), stats_);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    return std::max(sugar_[i] + (l.degree() - lm(i).degree()),
                    sugar_[j] + (l.degree() - lm(j).degree()));
  }

  bool pair_before(const Pair& a, const Pair& b) const {
    if (options_.strategy == SelectionStrategy::kSugar && a.sugar != b.sugar) {
      return a.sugar < b.sugar;
    }
    if (auto c = order_.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Pair take_next_pair() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
      if (pair_before(*it, *best)) best = it;
    }
    Pair p = std::move(*best);
    *best = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  // Reduces the leading term only; the tail is left for the final pass.
  Polynomial<F> top_reduce(Polynomial<F> p, unsigned& sugar) const {
    while (!p.is_zero()) {
      const auto& lt = p.leading_term();
      const Polynomial<F>* divisor = nullptr;
      std::size_t divisor_index = 0;
      for (std::size_t k : basis_) {
        if (lm(k).divides(lt.mono)) {
          divisor = &polys_[k];
          divisor_index = k;
          break;
        }
      }
      if (!divisor) break;
      const Monomial m = lt.mono / divisor->leading_monomial();
      sugar = std::max(sugar, sugar_[divisor_index] + m.degree());
      const F c = lt.coeff / divisor->leading_coeff();
      p.subtract_multiple(*divisor, m, c);
    }
    return p;
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial<F> poly, unsigned sugar) {
    const std::size_t h = polys_.size();
    polys_.push_back(std::move(poly));
    sugar_.push_back(sugar);
    const Monomial& lm_h = lm(h);

    std::vector<Pair> candidates;
    candidates.reserve(basis_.size());
    for (std::size_t g : basis_) {
      const Monomial l = lcm(lm(g), lm_h);
      candidates.push_back({g, h, l, pair_sugar(g, h, l)});
      ++stats_.pairs_created;
    }

    std::vector<Pair> kept;
    if (options_.chain_criterion) {
      for (std::size_t a = 0; a < candidates.size(); ++a) {
        const Pair& p = candidates[a];
        bool keep = lm(p.i).coprime(lm_h);
        if (!keep) {
          keep = true;
          for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
            if (candidates[b].lcm.divides(p.lcm)) keep = false;
          }
          for (std::size_t b = 0; b < kept.size() && keep; ++b) {
            if (kept[b].lcm.divides(p.lcm)) keep = false;
          }
        }
        if (keep) kept.push_back(p);
      }
    } else {
      kept = std::move(candidates);
    }

    if (options_.product_criterion) {
      std::erase_if(kept, [&](const Pair& p) { return lm(p.i).coprime(lm_h); });
    }

    if (options_.chain_criterion) {
      std::erase_if(pairs_, [&](const Pair& p) {
        return lm_h.divides(p.lcm) && lcm(lm(p.i), lm_h) != p.lcm &&
               lcm(lm(p.j), lm_h) != p.lcm;
      });
      std::erase_if(basis_, [&](std::size_t g) { return lm_h.divides(lm(g)); });
    }
    for (auto& p : kept) pairs_.push_back(std::move(p));
    basis_.push_back(h);
  }

  GroebnerBasis<F> finish() const {
    std::vector<Polynomial<F>> minimal;
    std::vector<std::size_t> order_idx = basis_;
    std::sort(order_idx.begin(), order_idx.end(), [this](std::size_t a, std::size_t b) {
      if (auto c = order_.compare(lm(a), lm(b)); c != 0) return c < 0;
      return a < b;
    });
    for (std::size_t k : order_idx) {
      const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& g) {
        return g.leading_monomial().divides(lm(k));
      });
      if (!redundant) minimal.push_back(polys_[k]);
    }
    // Inter-reduction: leading monomials are pairwise non-divisible, so each
    // element keeps its leading term while its tail is reduced.
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      Polynomial<F> tail = minimal[k];
      auto lead = tail.pop_leading_term();
      Polynomial<F> r = reduce_fully<F>(std::move(tail), minimal);
      Polynomial<F> head(ring_, order_);
      head.push_trailing_term(std::move(lead));
      reduced.push_back((head + r).monic());
    }
    return GroebnerBasis<F>(ring_, order_, std::move(reduced), stats_);
  }

  RingPtr ring_;
  TermOrder order_;
  GroebnerOptions options_;
  std::vector<Polynomial<F>> polys_;
  std::vector<unsigned> sugar_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

template <CoefficientField F>
GroebnerBasis<F> buchberger(const RingPtr& ring, std::span<const Polynomial<F>> generators,
                            TermOrder order, const GroebnerOptions& options) {
  // Validates field and order against the ring.
  (void)Polynomial<F>(ring, order);
  return BuchbergerRun<F>(ring, order, options).run(generators);
}

template <CoefficientField F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> generators, TermOrder order,
                            const GroebnerOptions& options) {
  if (generators.empty()) {
    throw InvalidArgument("buchberger: empty generator list has no ring; use the ring overload");
  }
  return buchberger<F>(generators.front().ring(), generators, order, options);
}

template <CoefficientField F>
bool is_groebner(std::span<const Polynomial<F>> basis, TermOrder order) {
  const auto converted = in_order(basis, order);
  for (const auto& g : converted) {
    if (g.is_zero()) throw InvalidArgument("is_groebner: zero basis element");
  }
  const std::span<const Polynomial<F>> view(converted);
  for (std::size_t i = 0; i < converted.size(); ++i) {
    for (std::size_t j = i + 1; j < converted.size(); ++j) {
      if (!reduce_fully<F>(s_polynomial(converted[i], converted[j], order), view).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

template class GroebnerBasis<Rational>;
template class GroebnerBasis<CycloElement>;

#define SYMPOW_INSTANTIATE_GROEBNER(F)                                                     \
  template Polynomial<F> s_polynomial<F>(const Polynomial<F>&, const Polynomial<F>&,       \
                                         TermOrder);                                       \
  template Polynomial<F> normal_form<F>(const Polynomial<F>&, std::span<const Polynomial<F>>, \
                                        TermOrder);                                        \
  template GroebnerBasis<F> buchberger<F>(std::span<const Polynomial<F>>, TermOrder,       \
                                          const GroebnerOptions&);                         \
  template GroebnerBasis<F> buchberger<F>(const RingPtr&, std::span<const Polynomial<F>>,  \
                                          TermOrder, const GroebnerOptions&);              \
  template bool is_groebner<F>(std::span<const Polynomial<F>>, TermOrder);

SYMPOW_INSTANTIATE_GROEBNER(Rational)
SYMPOW_INSTANTIATE_GROEBNER(CycloElement)

#undef SYMPOW_INSTANTIATE_GROEBNER

}  // namespace sympow
