#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympow/points.hpp"

namespace sympow {

using QwPolynomial = Polynomial<CycloElement>;
using QwIdeal = Ideal<CycloElement>;

enum class ClaimStatus { kVerified, kRefuted, kError };

const char* status_name(ClaimStatus s);

/// Data that lets a claim be re-checked independently: polynomials (witness,
/// remainder, basis elements), a scalar, and/or integer counts. `note` says
/// how to read them.
struct Certificate {
  std::vector<QwPolynomial> polynomials;
  std::optional<CycloElement> scalar;
  std::vector<std::int64_t> counts;
  std::string note;
};

struct ClaimResult {
  std::string claim_id;
  std::string description;
  ClaimStatus status = ClaimStatus::kError;
  Certificate certificate;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  /// True iff every claim has its expected status (VERIFIED).
  bool overall = true;
  std::vector<std::string> warnings;
  /// Degrees at which graded equality was sampled (empty if skipped).
  std::vector<unsigned> graded_degrees;
};

struct VerifyOptions {
  bool skip_graded = false;
  std::vector<unsigned> graded_degrees{10, 11, 12};
  /// Negative control: replace P12 = (1:1:w^2) by (1:1:2).
  bool tamper_points = false;
  GroebnerOptions groebner;
};

/// c with a == c * b, if any (zero polynomials are proportional only to each
/// other).
std::optional<CycloElement> proportionality(const QwPolynomial& a, const QwPolynomial& b);

/// The explicit polynomials of the dual Hesse example.
namespace hesse {
QwPolynomial nonic();  ///< x^6y^3 - x^3y^6 - x^6z^3 + y^6z^3 + x^3z^6 - y^3z^6
QwPolynomial f1();     ///< z(x^3 - y^3)
QwPolynomial f2();     ///< x(y^3 - z^3)
QwPolynomial f3();     ///< y(x^3 - z^3)
QwPolynomial g1();     ///< x^3 - z^3
QwPolynomial g2();     ///< y^3 - z^3
Configuration<CycloElement> tampered_config();
}  // namespace hesse

/// Lazily computed ideals of a twelve-point configuration (the dual Hesse
/// one by default). Not thread-safe.
class HesseContext {
 public:
  explicit HesseContext(Configuration<CycloElement> points = dual_hesse_config(),
                        std::vector<LineForm<CycloElement>> lines = dual_hesse_lines(),
                        GroebnerOptions options = {});

  const Configuration<CycloElement>& points() const { return points_; }
  std::span<const LineForm<CycloElement>> lines() const { return lines_; }

  /// I, the radical ideal of all points.
  const QwIdeal& radical();
  /// J, the radical ideal of points 4..12.
  const QwIdeal& radical_of_last_nine();
  /// I^r.
  const QwIdeal& power(unsigned r);
  /// I^(m).
  const QwIdeal& symbolic(unsigned m);

 private:
  Configuration<CycloElement> points_;
  std::vector<LineForm<CycloElement>> lines_;
  GroebnerOptions options_;
  std::optional<QwIdeal> radical_;
  std::optional<QwIdeal> radical_last_nine_;
  std::map<unsigned, QwIdeal> power_;
  std::map<unsigned, QwIdeal> symbolic_;
};

ClaimResult verify_incidence(HesseContext& ctx);
/// I == (generators), default (f1, f2, f3).
ClaimResult verify_generators_I(HesseContext& ctx, std::optional<std::vector<QwPolynomial>> generators = std::nullopt);
/// J == (generators), default (g1, g2).
ClaimResult verify_generators_J(HesseContext& ctx, std::optional<std::vector<QwPolynomial>> generators = std::nullopt);
/// lhs == rhs exactly; defaults yz(y^3-z^3) and z*y(x^3-z^3) - y*z(x^3-y^3).
ClaimResult verify_syzygy_identity(std::optional<QwPolynomial> lhs = std::nullopt,
                                   std::optional<QwPolynomial> rhs = std::nullopt);
/// Product of the lines is a nonzero multiple of the displayed nonic.
ClaimResult verify_f_formula(std::span<const LineForm<CycloElement>> lines);
/// f ∈ I^(3), by normal form and by vanishing order at every point.
ClaimResult verify_symbolic_membership(HesseContext& ctx);
/// f ∉ I^2, with the nonzero remainder as certificate.
ClaimResult verify_noncontainment(HesseContext& ctx);
/// dim (I^(3))_degree == 1 and the basis element is proportional to f.
ClaimResult verify_degree9_uniqueness(HesseContext& ctx, unsigned degree = 9);
/// I^(2r) ⊆ I^r.
ClaimResult verify_els_containment(HesseContext& ctx, unsigned r = 2);
/// (I^(3))_t == (I^2)_t at each sampled t; t < 10 only when `contrast`.
ClaimResult verify_graded_equality(HesseContext& ctx, std::span<const unsigned> degrees,
                                   bool contrast = false);

/// (I^(2))_t == (I^2)_t and (I^(3))_t ⊆ (I^2)_t at each sampled t >= 10.
ClaimResult verify_graded_square_agreement(HesseContext& ctx, std::span<const unsigned> degrees);

/// Runs every claim in dependency order: incidence, generators, syzygy,
/// nonic, membership pair, uniqueness, containment, graded claims.
VerificationReport run_all(const VerifyOptions& options = {});

}  // namespace sympow
