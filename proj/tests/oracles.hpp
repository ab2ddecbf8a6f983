// Test-only helpers: random inputs and linear-algebra oracles that share no
// code with the Groebner path.
#pragma once

#include <random>
#include <vector>

#include "sympow/points.hpp"

namespace oracle {

using sympow::CoefficientField;
using sympow::CycloElement;
using sympow::Monomial;
using sympow::Polynomial;
using sympow::Rational;

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }

  Rational rational(long bound = 20) { return Rational(integer(-bound, bound), integer(1, bound)); }
  Rational nonzero_rational(long bound = 20) {
    Rational r;
    while ((r = rational(bound)).is_zero()) {
    }
    return r;
  }
  CycloElement cyclo(long bound = 20) { return CycloElement(rational(bound), rational(bound)); }

  template <CoefficientField F>
  F scalar(long bound = 20) {
    if constexpr (std::is_same_v<F, Rational>) {
      return rational(bound);
    } else {
      return cyclo(bound);
    }
  }

  /// Polynomial with up to `terms` terms of degree <= max_degree (exactly
  /// max_degree when homogeneous).
  template <CoefficientField F>
  Polynomial<F> polynomial(const sympow::RingPtr& ring, std::size_t terms, unsigned max_degree,
                           bool homogeneous, long bound = 9) {
    std::vector<sympow::Term<F>> out;
    const std::size_t n = ring->size();
    for (std::size_t i = 0; i < terms; ++i) {
      const unsigned d = homogeneous ? max_degree : static_cast<unsigned>(integer(0, max_degree));
      std::vector<std::uint32_t> e(n, 0);
      for (unsigned k = 0; k < d; ++k) ++e[index(n)];
      out.push_back({Monomial(e), scalar<F>(bound)});
    }
    return Polynomial<F>::from_terms(ring, std::move(out));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), gen_);
  }

 private:
  std::mt19937_64 gen_;
};

/// All exponent vectors of degree t in n variables, in an arbitrary fixed
/// order (independent of the library's enumeration).
inline std::vector<Monomial> monomials(std::size_t n, unsigned t) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(Monomial(e));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, t);
  return out;
}

/// Rank by plain forward elimination.
template <CoefficientField F>
std::size_t rank(std::vector<std::vector<F>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const F factor = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
    }
    ++r;
  }
  return r;
}

template <CoefficientField F>
std::vector<F> coefficient_row(const Polynomial<F>& f, const std::vector<Monomial>& basis) {
  std::vector<F> row(basis.size(), F::zero());
  for (const auto& term : f.terms()) {
    bool found = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == term.mono) {
        row[i] = term.coeff;
        found = true;
      }
    }
    if (!found) throw std::logic_error("monomial outside basis");
  }
  return row;
}

/// Rows of all degree-t multiples m*g of homogeneous generators.
template <CoefficientField F>
std::vector<std::vector<F>> multiples(std::span<const Polynomial<F>> gens, std::size_t n, unsigned t) {
  const auto cols = monomials(n, t);
  std::vector<std::vector<F>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > static_cast<int>(t)) continue;
    for (const auto& m : monomials(n, t - static_cast<unsigned>(g.degree()))) {
      rows.push_back(coefficient_row(g.times_term(m, F::one()), cols));
    }
  }
  return rows;
}

/// dim of the degree-t piece of the ideal spanned by homogeneous generators.
template <CoefficientField F>
std::size_t span_dim(std::span<const Polynomial<F>> gens, std::size_t n, unsigned t) {
  return rank(multiples(gens, n, t));
}

/// Membership of homogeneous f by exact linear algebra in degree deg f.
template <CoefficientField F>
bool span_member(const Polynomial<F>& f, std::span<const Polynomial<F>> gens, std::size_t n) {
  if (f.is_zero()) return true;
  const unsigned t = static_cast<unsigned>(f.degree());
  auto rows = multiples(gens, n, t);
  const std::size_t before = rank(rows);
  rows.push_back(coefficient_row(f, monomials(n, t)));
  return rank(rows) == before;
}

inline Rational falling(std::uint32_t e, std::uint32_t i) {
  Rational r = Rational::one();
  for (std::uint32_t k = 0; k < i; ++k) r *= Rational(static_cast<long>(e - k));
  return r;
}

/// dim of forms of degree t vanishing to order >= m at every point, from the
/// rank of the matrix of Taylor conditions in each point's affine chart.
template <CoefficientField F>
std::size_t fat_point_dim(const sympow::Configuration<F>& c, unsigned m, unsigned t) {
  const auto cols = monomials(3, t);
  std::vector<std::vector<F>> rows;
  for (const auto& p : c) {
    const std::size_t k = p.chart();
    const auto q = p.in_chart(k);
    const std::size_t a = (k + 1) % 3;
    const std::size_t b = (k + 2) % 3;
    for (unsigned i = 0; i < m; ++i) {
      for (unsigned j = 0; i + j < m; ++j) {
        std::vector<F> row;
        for (const auto& mono : cols) {
          const std::uint32_t ea = mono[a];
          const std::uint32_t eb = mono[b];
          if (ea < i || eb < j) {
            row.push_back(F::zero());
            continue;
          }
          F v = F(falling(ea, i) * falling(eb, j));
          for (std::uint32_t s = 0; s < ea - i; ++s) v *= q[a];
          for (std::uint32_t s = 0; s < eb - j; ++s) v *= q[b];
          row.push_back(v);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return cols.size() - rank(rows);
}

}  // namespace oracle
