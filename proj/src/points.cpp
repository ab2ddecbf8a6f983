#include "sympow/points.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace sympow {

template <CoefficientField F>
const RingPtr& plane_ring() {
  static const RingPtr ring = Ring::make({"x", "y", "z"}, F::kind);
  return ring;
}

// ---------------------------------------------------------------------------
// ProjectivePoint

template <CoefficientField F>
ProjectivePoint<F>::ProjectivePoint(F x, F y, F z)
    : coords_{std::move(x), std::move(y), std::move(z)} {
  const auto lead = std::find_if(coords_.begin(), coords_.end(),
                                 [](const F& c) { return !c.is_zero(); });
  if (lead == coords_.end()) throw InvalidArgument("(0:0:0) is not a projective point");
  if (!lead->is_one()) {
    const F inv = lead->inverse();
    for (auto& c : coords_) c *= inv;
  }
}

template <CoefficientField F>
std::size_t ProjectivePoint<F>::chart() const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!coords_[i].is_zero()) return i;
  }
  return 0;
}

template <CoefficientField F>
std::array<F, 3> ProjectivePoint<F>::in_chart(std::size_t k) const {
  if (k >= 3 || coords_[k].is_zero()) {
    throw InvalidArgument("point does not lie in affine chart " + std::to_string(k));
  }
  std::array<F, 3> out = coords_;
  const F inv = coords_[k].inverse();
  for (auto& c : out) c *= inv;
  return out;
}

template <CoefficientField F>
Configuration<F>::Configuration(std::vector<ProjectivePoint<F>> points)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) {
        throw InvalidArgument("configuration repeats point " + std::to_string(j + 1) +
                              " at position " + std::to_string(i + 1));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// LineForm

template <CoefficientField F>
LineForm<F>::LineForm(const Polynomial<F>& form) : form_(form.with_order(TermOrder::grevlex())) {
  require_same_ring(plane_ring<F>(), form.ring());
  if (form_.is_zero() || !form_.is_homogeneous() || form_.degree() != 1) {
    throw InvalidArgument("a line must be a nonzero linear form");
  }
  form_ = form_.monic();
}

template <CoefficientField F>
LineForm<F> LineForm<F>::from_coefficients(const F& a, const F& b, const F& c) {
  const RingPtr& ring = plane_ring<F>();
  std::vector<Term<F>> terms;
  terms.push_back({Monomial::variable(0), a});
  terms.push_back({Monomial::variable(1), b});
  terms.push_back({Monomial::variable(2), c});
  return LineForm(Polynomial<F>::from_terms(ring, std::move(terms)));
}

template <CoefficientField F>
std::array<F, 3> LineForm<F>::coefficients() const {
  std::array<F, 3> out{F::zero(), F::zero(), F::zero()};
  for (const auto& t : form_.terms()) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.mono[i] == 1) out[i] = t.coeff;
    }
  }
  return out;
}

template <CoefficientField F>
bool LineForm<F>::passes_through(const ProjectivePoint<F>& p) const {
  return form_.evaluate(p.coords()).is_zero();
}

// ---------------------------------------------------------------------------
// Ideals of points

template <CoefficientField F>
Ideal<F> point_ideal(const ProjectivePoint<F>& p) {
  const RingPtr& ring = plane_ring<F>();
  std::array<Polynomial<F>, 3> vars{Polynomial<F>::variable(ring, 0),
                                    Polynomial<F>::variable(ring, 1),
                                    Polynomial<F>::variable(ring, 2)};
  std::vector<Polynomial<F>> minors;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      // x_i * p_j - x_j * p_i
      minors.push_back(vars[i].scaled(p[j]) - vars[j].scaled(p[i]));
    }
  }
  auto basis = std::make_shared<const GroebnerBasis<F>>(
      buchberger<F>(ring, minors, TermOrder::grevlex()));
  return Ideal<F>::from_basis(std::move(basis));
}

template <CoefficientField F>
Ideal<F> radical_ideal(const Configuration<F>& c, const GroebnerOptions& options) {
  return symbolic_power(c, 1, options);
}

template <CoefficientField F>
Ideal<F> symbolic_power(const Configuration<F>& c, unsigned m, const GroebnerOptions& options) {
  if (c.empty()) throw InvalidArgument("empty configuration");
  if (m == 0) throw InvalidArgument("symbolic power exponent must be at least 1");
  std::vector<Ideal<F>> powers;
  powers.reserve(c.size());
  for (const auto& p : c) powers.push_back(ideal_power(point_ideal(p), m));
  return ideal_intersect_many<F>(powers, options);
}

template <CoefficientField F>
bool vanishing_order_at_least(const Polynomial<F>& f, const ProjectivePoint<F>& p, unsigned m,
                              std::optional<std::size_t> chart) {
  require_same_ring(plane_ring<F>(), f.ring());
  if (m == 0) return true;
  const std::size_t k = chart.value_or(p.chart());
  const std::array<F, 3> at = p.in_chart(k);
  std::array<std::size_t, 2> free{};
  for (std::size_t i = 0, n = 0; i < 3; ++i) {
    if (i != k) free[n++] = i;
  }
  Polynomial<F> da = f;
  for (unsigned a = 0; a < m; ++a) {
    Polynomial<F> d = da;
    for (unsigned b = 0; a + b < m; ++b) {
      if (!d.evaluate(at).is_zero()) return false;
      d = d.derivative(free[1]);
    }
    da = da.derivative(free[0]);
  }
  return true;
}

template <CoefficientField F>
LineForm<F> line_through(const ProjectivePoint<F>& p, const ProjectivePoint<F>& q) {
  if (p == q) throw InvalidArgument("line_through: points coincide");
  return LineForm<F>::from_coefficients(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2],
                                        p[0] * q[1] - p[1] * q[0]);
}

template <CoefficientField F>
Polynomial<F> product_of_lines(std::span<const LineForm<F>> lines) {
  if (lines.empty()) throw InvalidArgument("product_of_lines: no lines");
  Polynomial<F> product = lines.front().polynomial();
  for (std::size_t i = 1; i < lines.size(); ++i) product *= lines[i].polynomial();
  return product;
}

template <CoefficientField F>
std::vector<std::vector<bool>> incidence_matrix(const Configuration<F>& c,
                                                std::span<const LineForm<F>> lines) {
  std::vector<std::vector<bool>> out(c.size(), std::vector<bool>(lines.size(), false));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < lines.size(); ++j) out[i][j] = lines[j].passes_through(c[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configuration families

Configuration<CycloElement> dual_hesse_config() {
  using P = ProjectivePoint<CycloElement>;
  const CycloElement one = CycloElement::one();
  const CycloElement zero = CycloElement::zero();
  const CycloElement e = CycloElement::omega();
  const CycloElement e2 = CycloElement::omega_squared();
  return Configuration<CycloElement>({
      P(one, zero, zero), P(zero, one, zero), P(zero, zero, one),
      P(one, one, one),   P(one, e, e2),      P(one, e2, e),
      P(e, one, one),     P(one, e, one),     P(one, one, e),
      P(e2, one, one),    P(one, e2, one),    P(one, one, e2),
  });
}

std::vector<LineForm<CycloElement>> dual_hesse_lines() {
  using L = LineForm<CycloElement>;
  const CycloElement one = CycloElement::one();
  const CycloElement zero = CycloElement::zero();
  const CycloElement e = CycloElement::omega();
  const CycloElement e2 = CycloElement::omega_squared();
  return {
      L::from_coefficients(one, -one, zero), L::from_coefficients(one, zero, -one),
      L::from_coefficients(zero, one, -one), L::from_coefficients(one, -e, zero),
      L::from_coefficients(one, zero, -e),   L::from_coefficients(zero, one, -e),
      L::from_coefficients(one, -e2, zero),  L::from_coefficients(one, zero, -e2),
      L::from_coefficients(zero, one, -e2),
  };
}

template <CoefficientField F>
std::vector<LineForm<F>> default_star_lines(unsigned s) {
  std::vector<LineForm<F>> lines;
  lines.reserve(s);
  for (unsigned i = 1; i <= s; ++i) {
    const long v = static_cast<long>(i);
    lines.push_back(LineForm<F>::from_coefficients(F::one(), F(v), F(v * v)));
  }
  return lines;
}

namespace {

template <CoefficientField F>
F det3(const std::array<F, 3>& a, const std::array<F, 3>& b, const std::array<F, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

template <CoefficientField F>
Configuration<F> star_configuration(unsigned s, std::optional<std::vector<LineForm<F>>> lines) {
  if (s < 2) throw InvalidArgument("star configuration needs at least 2 lines");
  const std::vector<LineForm<F>> ls = lines ? std::move(*lines) : default_star_lines<F>(s);
  if (ls.size() != s) {
    throw InvalidArgument("star configuration: expected " + std::to_string(s) + " lines, got " +
                          std::to_string(ls.size()));
  }
  std::vector<std::array<F, 3>> coeffs;
  for (const auto& l : ls) coeffs.push_back(l.coefficients());
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      if (ls[i] == ls[j]) throw InvalidArgument("star configuration: repeated line");
      for (std::size_t k = j + 1; k < s; ++k) {
        if (det3(coeffs[i], coeffs[j], coeffs[k]).is_zero()) {
          throw InvalidArgument("star configuration: lines " + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ", " + std::to_string(k + 1) +
                                " are concurrent");
        }
      }
    }
  }
  std::vector<ProjectivePoint<F>> points;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      const auto& a = coeffs[i];
      const auto& b = coeffs[j];
      points.emplace_back(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                          a[0] * b[1] - a[1] * b[0]);
    }
  }
  return Configuration<F>(std::move(points));
}

Configuration<Rational> random_rational_config(unsigned k, std::uint64_t seed) {
  constexpr long kBound = 50;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(-kBound, kBound);
  std::uniform_int_distribution<long> denominator(1, kBound);
  auto draw = [&] {
    const long p = numerator(rng);
    return Rational(p, denominator(rng));
  };
  std::vector<ProjectivePoint<Rational>> points;
  const unsigned budget = 1000 + 100 * k;
  for (unsigned attempt = 0; points.size() < k; ++attempt) {
    if (attempt >= budget) {
      throw Error("random_rational_config: retry budget exhausted for seed " +
                  std::to_string(seed));
    }
    Rational x = draw();
    Rational y = draw();
    Rational z = draw();
    if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
    ProjectivePoint<Rational> p(std::move(x), std::move(y), std::move(z));
    if (std::find(points.begin(), points.end(), p) != points.end()) continue;
    points.push_back(std::move(p));
  }
  return Configuration<Rational>(std::move(points));
}

// ---------------------------------------------------------------------------

template class ProjectivePoint<Rational>;
template class ProjectivePoint<CycloElement>;
template class Configuration<Rational>;
template class Configuration<CycloElement>;
template class LineForm<Rational>;
template class LineForm<CycloElement>;

#define SYMPOW_INSTANTIATE_POINTS(F)                                                          \
  template const RingPtr& plane_ring<F>();                                                    \
  template Ideal<F> point_ideal<F>(const ProjectivePoint<F>&);                                \
  template Ideal<F> radical_ideal<F>(const Configuration<F>&, const GroebnerOptions&);        \
  template Ideal<F> symbolic_power<F>(const Configuration<F>&, unsigned,                      \
                                      const GroebnerOptions&);                                \
  template bool vanishing_order_at_least<F>(const Polynomial<F>&, const ProjectivePoint<F>&,  \
                                            unsigned, std::optional<std::size_t>);            \
  template LineForm<F> line_through<F>(const ProjectivePoint<F>&, const ProjectivePoint<F>&); \
  template Polynomial<F> product_of_lines<F>(std::span<const LineForm<F>>);                   \
  template std::vector<std::vector<bool>> incidence_matrix<F>(const Configuration<F>&,        \
                                                              std::span<const LineForm<F>>);  \
  template std::vector<LineForm<F>> default_star_lines<F>(unsigned);                          \
  template Configuration<F> star_configuration<F>(unsigned,                                   \
                                                  std::optional<std::vector<LineForm<F>>>);

SYMPOW_INSTANTIATE_POINTS(Rational)
SYMPOW_INSTANTIATE_POINTS(CycloElement)

#undef SYMPOW_INSTANTIATE_POINTS

}  // namespace sympow
