#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sympow/ideal.hpp"

namespace sympow {

/// The ring k[x, y, z] of the projective plane over F. One shared instance
/// per field, so every plane object compares by pointer.
template <CoefficientField F>
const RingPtr& plane_ring();

/// Point of P^2(F) in canonical form: the first nonzero coordinate is one.
template <CoefficientField F>
class ProjectivePoint {
 public:
  /// Throws InvalidArgument if all coordinates vanish.
  ProjectivePoint(F x, F y, F z);

  const std::array<F, 3>& coords() const { return coords_; }
  const F& operator[](std::size_t i) const { return coords_[i]; }
  /// Index of the first nonzero coordinate (the default affine chart).
  std::size_t chart() const;
  /// Representative with coordinate `k` scaled to one; coords()[k] != 0.
  std::array<F, 3> in_chart(std::size_t k) const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::array<F, 3> coords_;
};

/// Finite set of pairwise distinct points.
template <CoefficientField F>
class Configuration {
 public:
  Configuration() = default;
  /// Throws InvalidArgument on a repeated point.
  explicit Configuration(std::vector<ProjectivePoint<F>> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const ProjectivePoint<F>& operator[](std::size_t i) const { return points_[i]; }
  std::span<const ProjectivePoint<F>> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<ProjectivePoint<F>> points_;
};

/// Nonzero linear form a*x + b*y + c*z, scaled so its first nonzero
/// coefficient is one.
template <CoefficientField F>
class LineForm {
 public:
  /// Throws InvalidArgument unless `form` is a nonzero homogeneous linear
  /// form in plane_ring<F>().
  explicit LineForm(const Polynomial<F>& form);
  static LineForm from_coefficients(const F& a, const F& b, const F& c);

  const Polynomial<F>& polynomial() const { return form_; }
  std::array<F, 3> coefficients() const;
  bool passes_through(const ProjectivePoint<F>& p) const;

  friend bool operator==(const LineForm&, const LineForm&) = default;

 private:
  Polynomial<F> form_;
};

/// Prime ideal of p, from the 2x2 minors of [x y z; p]. Generators are the
/// reduced GREVLEX basis (two linear forms).
template <CoefficientField F>
Ideal<F> point_ideal(const ProjectivePoint<F>& p);

/// Intersection of the point ideals of a nonempty configuration.
template <CoefficientField F>
Ideal<F> radical_ideal(const Configuration<F>& c, const GroebnerOptions& options = {});

/// m-th symbolic power of the radical ideal of c, computed as the
/// intersection of the m-th powers of the point ideals. For points this
/// coincides with the localization definition, since the associated primes
/// of the radical ideal are exactly the point ideals.
template <CoefficientField F>
Ideal<F> symbolic_power(const Configuration<F>& c, unsigned m,
                        const GroebnerOptions& options = {});

/// True iff every partial derivative of f of order < m vanishes at p, in the
/// affine chart `chart` (default: p.chart()). Over characteristic zero this
/// is f ∈ I(p)^m.
template <CoefficientField F>
bool vanishing_order_at_least(const Polynomial<F>& f, const ProjectivePoint<F>& p, unsigned m,
                              std::optional<std::size_t> chart = std::nullopt);

/// The line through two distinct points (cross product of coordinates).
template <CoefficientField F>
LineForm<F> line_through(const ProjectivePoint<F>& p, const ProjectivePoint<F>& q);

template <CoefficientField F>
Polynomial<F> product_of_lines(std::span<const LineForm<F>> lines);

/// incidence[i][j] is true iff point i lies on line j.
template <CoefficientField F>
std::vector<std::vector<bool>> incidence_matrix(const Configuration<F>& c,
                                                std::span<const LineForm<F>> lines);

/// The twelve points of the dual Hesse configuration over Q(w):
/// (1:0:0), (0:1:0), (0:0:1), (1:1:1), (1:w:w^2), (1:w^2:w),
/// (w:1:1), (1:w:1), (1:1:w), (w^2:1:1), (1:w^2:1), (1:1:w^2).
Configuration<CycloElement> dual_hesse_config();

/// Its nine lines: x-y, x-z, y-z, x-w*y, x-w*z, y-w*z, x-w^2*y, x-w^2*z, y-w^2*z.
std::vector<LineForm<CycloElement>> dual_hesse_lines();

/// Default general lines for star configurations: the i-th line (i = 1..s)
/// is x + i*y + i^2*z. Coefficient rows form a Vandermonde matrix, so no
/// three lines are concurrent.
template <CoefficientField F>
std::vector<LineForm<F>> default_star_lines(unsigned s);

/// Pairwise intersection points of s >= 2 lines, no three concurrent
/// (validated; throws InvalidArgument otherwise).
template <CoefficientField F>
Configuration<F> star_configuration(unsigned s,
                                    std::optional<std::vector<LineForm<F>>> lines = std::nullopt);

/// k distinct points whose coordinates are rationals p/q with |p| <= 50 and
/// 1 <= q <= 50, from a seeded std::mt19937_64. Deterministic per seed.
Configuration<Rational> random_rational_config(unsigned k, std::uint64_t seed);

extern template class ProjectivePoint<Rational>;
extern template class ProjectivePoint<CycloElement>;
extern template class Configuration<Rational>;
extern template class Configuration<CycloElement>;
extern template class LineForm<Rational>;
extern template class LineForm<CycloElement>;

}  // namespace sympow
