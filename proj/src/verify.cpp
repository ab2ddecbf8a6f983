#include "sympow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "sympow/parse.hpp"

namespace sympow {

using C = CycloElement;

const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kVerified:
      return "VERIFIED";
    case ClaimStatus::kRefuted:
      return "REFUTED";
    case ClaimStatus::kError:
      return "ERROR";
  }
  return "ERROR";
}

std::optional<C> proportionality(const QwPolynomial& a, const QwPolynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return C::one();
    return std::nullopt;
  }
  const C c = a.leading_coeff() / b.leading_coeff();
  if (a == b.scaled(c)) return c;
  return std::nullopt;
}

namespace hesse {
namespace {
QwPolynomial poly(std::string_view text) { return parse_polynomial<C>(plane_ring<C>(), text); }
}  // namespace

QwPolynomial nonic() {
  return poly("x^6*y^3 - x^3*y^6 - x^6*z^3 + y^6*z^3 + x^3*z^6 - y^3*z^6");
}
QwPolynomial f1() { return poly("z*(x^3 - y^3)"); }
QwPolynomial f2() { return poly("x*(y^3 - z^3)"); }
QwPolynomial f3() { return poly("y*(x^3 - z^3)"); }
QwPolynomial g1() { return poly("x^3 - z^3"); }
QwPolynomial g2() { return poly("y^3 - z^3"); }

Configuration<C> tampered_config() {
  const auto base = dual_hesse_config();
  std::vector<ProjectivePoint<C>> pts(base.begin(), base.end());
  pts.back() = ProjectivePoint<C>(C::one(), C::one(), C(2));
  return Configuration<C>(std::move(pts));
}
}  // namespace hesse

// ---------------------------------------------------------------------------

HesseContext::HesseContext(Configuration<C> points, std::vector<LineForm<C>> lines,
                           GroebnerOptions options)
    : points_(std::move(points)), lines_(std::move(lines)), options_(options) {}

const QwIdeal& HesseContext::radical() {
  if (!radical_) radical_ = radical_ideal(points_, options_);
  return *radical_;
}

const QwIdeal& HesseContext::radical_of_last_nine() {
  if (!radical_last_nine_) {
    if (points_.size() < 4) throw InvalidArgument("configuration has fewer than four points");
    std::vector<ProjectivePoint<C>> tail(points_.begin() + 3, points_.end());
    radical_last_nine_ = radical_ideal(Configuration<C>(std::move(tail)), options_);
  }
  return *radical_last_nine_;
}

const QwIdeal& HesseContext::power(unsigned r) {
  auto it = power_.find(r);
  if (it == power_.end()) it = power_.emplace(r, ideal_power(radical(), r)).first;
  return it->second;
}

const QwIdeal& HesseContext::symbolic(unsigned m) {
  auto it = symbolic_.find(m);
  if (it == symbolic_.end()) {
    it = symbolic_.emplace(m, m == 1 ? radical() : symbolic_power(points_, m, options_)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

ClaimResult run_claim(std::string id, std::string description,
                      const std::function<void(ClaimResult&)>& body) {
  ClaimResult r;
  r.claim_id = std::move(id);
  r.description = std::move(description);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = ClaimStatus::kError;
    r.certificate.note = std::string("error: ") + e.what();
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ClaimStatus status_of(bool ok) { return ok ? ClaimStatus::kVerified : ClaimStatus::kRefuted; }

std::string join(const std::vector<unsigned>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

void compare_with_generators(ClaimResult& r, const QwIdeal& built,
                             const std::vector<QwPolynomial>& generators) {
  const QwIdeal given(plane_ring<C>(), generators);
  if (ideal_equals(built, given)) {
    r.status = ClaimStatus::kVerified;
    const auto gb = built.groebner_basis();
    r.certificate.polynomials.assign(gb->elements().begin(), gb->elements().end());
    r.certificate.counts = {static_cast<std::int64_t>(gb->size())};
    r.certificate.note = "common reduced grevlex basis";
    return;
  }
  r.status = ClaimStatus::kRefuted;
  if (auto w = find_uncontained_generator(given, built)) {
    r.certificate.polynomials = {w->generator, w->remainder};
    r.certificate.note = "element of the point ideal outside the given ideal, then its remainder";
  } else if (auto w2 = find_uncontained_generator(built, given)) {
    r.certificate.polynomials = {w2->generator, w2->remainder};
    r.certificate.note = "given generator outside the point ideal, then its remainder";
  }
}

}  // namespace

ClaimResult verify_incidence(HesseContext& ctx) {
  return run_claim("incidence", "12 points and 9 lines, 3 lines per point, 4 points per line",
                   [&](ClaimResult& r) {
    const auto m = incidence_matrix(ctx.points(), ctx.lines());
    std::vector<std::int64_t> rows(ctx.points().size(), 0);
    std::vector<std::int64_t> cols(ctx.lines().size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (m[i][j]) ++rows[i], ++cols[j];
      }
    }
    const bool ok = rows.size() == 12 && cols.size() == 9 &&
                    std::ranges::all_of(rows, [](auto s) { return s == 3; }) &&
                    std::ranges::all_of(cols, [](auto s) { return s == 4; });
    r.status = status_of(ok);
    r.certificate.counts = rows;
    r.certificate.counts.insert(r.certificate.counts.end(), cols.begin(), cols.end());
    r.certificate.note = "row sums per point, then column sums per line";
  });
}

ClaimResult verify_generators_I(HesseContext& ctx,
                                std::optional<std::vector<QwPolynomial>> generators) {
  return run_claim("generators_I", "I = (f1, f2, f3)", [&](ClaimResult& r) {
    compare_with_generators(r, ctx.radical(),
                            generators.value_or(std::vector{hesse::f1(), hesse::f2(), hesse::f3()}));
  });
}

ClaimResult verify_generators_J(HesseContext& ctx,
                                std::optional<std::vector<QwPolynomial>> generators) {
  return run_claim("generators_J", "J = I(P4..P12) = (g1, g2)", [&](ClaimResult& r) {
    compare_with_generators(r, ctx.radical_of_last_nine(),
                            generators.value_or(std::vector{hesse::g1(), hesse::g2()}));
  });
}

ClaimResult verify_syzygy_identity(std::optional<QwPolynomial> lhs,
                                   std::optional<QwPolynomial> rhs) {
  return run_claim("syzygy_identity", "yz(y^3-z^3) = z*y(x^3-z^3) - y*z(x^3-y^3)",
                   [&](ClaimResult& r) {
    const auto& ring = plane_ring<C>();
    const auto y = QwPolynomial::variable(ring, "y");
    const auto z = QwPolynomial::variable(ring, "z");
    const QwPolynomial left = lhs.value_or(y * z * hesse::g2());
    const QwPolynomial right = rhs.value_or(z * hesse::f3() - y * hesse::f1());
    const QwPolynomial diff = left - right;

    // Pointwise consistency at a few fixed points.
    const std::vector<std::array<C, 3>> samples{
        {C(2), C(-1), C(3)}, {C(1), C::omega(), C(5)}, {C(-4), C(7), C::omega_squared()},
        {C(Rational(3, 2)), C(0), C(1)}, {C(1), C(1), C(2, -1)}};
    std::int64_t agree = 0;
    for (const auto& p : samples) agree += left.evaluate(p) == right.evaluate(p);

    r.status = status_of(diff.is_zero());
    r.certificate.polynomials = {left, diff};
    r.certificate.counts = {agree, static_cast<std::int64_t>(samples.size())};
    r.certificate.note = "left side, left minus right; sample points agreeing out of total";
  });
}

ClaimResult verify_f_formula(std::span<const LineForm<C>> lines) {
  return run_claim("f_formula", "product of the nine lines is proportional to f",
                   [&](ClaimResult& r) {
    const QwPolynomial f = hesse::nonic();
    const QwPolynomial product = product_of_lines(lines);
    const auto c = proportionality(product, f);
    r.status = status_of(c.has_value());
    if (c) {
      r.certificate.scalar = *c;
      r.certificate.polynomials = {product};
      r.certificate.note = "product of lines equals scalar * f";
    } else {
      r.certificate.polynomials = {product};
      r.certificate.counts = {product.degree(), f.degree()};
      r.certificate.note = "product of lines; its degree and the degree of f";
    }
  });
}

ClaimResult verify_symbolic_membership(HesseContext& ctx) {
  return run_claim("f_in_symbolic_cube", "f lies in I^(3)", [&](ClaimResult& r) {
    const QwPolynomial f = hesse::nonic();
    const QwPolynomial rem = normal_form(f, *ctx.symbolic(3).groebner_basis());
    std::int64_t triple = 0;
    for (const auto& p : ctx.points()) triple += vanishing_order_at_least(f, p, 3);
    r.status = status_of(rem.is_zero() && triple == static_cast<std::int64_t>(ctx.points().size()));
    r.certificate.polynomials = {f, rem};
    r.certificate.counts = {triple, static_cast<std::int64_t>(ctx.points().size())};
    r.certificate.note = "f and its remainder modulo I^(3); points of vanishing order >= 3 out of total";
  });
}

ClaimResult verify_noncontainment(HesseContext& ctx) {
  return run_claim("f_not_in_square", "f is not in I^2, hence I^(3) is not contained in I^2",
                   [&](ClaimResult& r) {
    const QwPolynomial f = hesse::nonic();
    const QwPolynomial rem = normal_form(f, *ctx.power(2).groebner_basis());
    r.status = status_of(!rem.is_zero());
    r.certificate.polynomials = {rem};
    r.certificate.note = "normal form of f modulo the reduced grevlex basis of I^2";
  });
}

ClaimResult verify_degree9_uniqueness(HesseContext& ctx, unsigned degree) {
  return run_claim("degree9_uniqueness", "f spans the degree-9 piece of I^(3)",
                   [&](ClaimResult& r) {
    const auto basis = graded_piece_basis(ctx.symbolic(3), degree);
    r.certificate.counts = {static_cast<std::int64_t>(basis.size())};
    r.certificate.polynomials = basis;
    std::optional<C> c;
    if (basis.size() == 1) c = proportionality(basis.front(), hesse::nonic());
    r.status = status_of(c.has_value());
    if (c) r.certificate.scalar = *c;
    r.certificate.note = "basis of (I^(3))_" + std::to_string(degree) +
                         " in echelon form; dimension; basis element = scalar * f";
  });
}

ClaimResult verify_els_containment(HesseContext& ctx, unsigned r_power) {
  return run_claim("els_containment",
                   "I^(" + std::to_string(2 * r_power) + ") is contained in I^" +
                       std::to_string(r_power),
                   [&](ClaimResult& r) {
    const QwIdeal& big = ctx.power(r_power);
    const QwIdeal& small = ctx.symbolic(2 * r_power);
    const auto witness = find_uncontained_generator(big, small);
    r.status = status_of(!witness);
    r.certificate.counts = {static_cast<std::int64_t>(small.generators().size())};
    if (witness) {
      r.certificate.polynomials = {witness->generator, witness->remainder};
      r.certificate.note = "generator outside the ordinary power, then its remainder";
    } else {
      r.certificate.note = "every generator of the symbolic power reduces to zero; count of generators";
    }
  });
}

ClaimResult verify_graded_equality(HesseContext& ctx, std::span<const unsigned> degrees,
                                   bool contrast) {
  const std::vector<unsigned> ts(degrees.begin(), degrees.end());
  return run_claim("graded_equality", "(I^(3))_t = (I^2)_t at sampled t", [&](ClaimResult& r) {
    if (ts.empty()) {
      r.status = ClaimStatus::kVerified;
      r.certificate.note = "vacuous: no degrees sampled";
      return;
    }
    if (!contrast && std::ranges::any_of(ts, [](unsigned t) { return t < 10; })) {
      throw InvalidArgument("graded equality is asserted only for t >= 10");
    }
    bool ok = true;
    for (unsigned t : ts) {
      const auto basis = graded_piece_basis(ctx.symbolic(3), t);
      const std::size_t d2 = graded_dim(ctx.power(2), t);
      bool members = true;
      for (const auto& g : basis) {
        if (!ideal_member(g, ctx.power(2))) {
          members = false;
          if (r.certificate.polynomials.empty()) {
            r.certificate.polynomials = {g, normal_form(g, *ctx.power(2).groebner_basis())};
          }
        }
      }
      r.certificate.counts.insert(r.certificate.counts.end(),
                                  {static_cast<std::int64_t>(t),
                                   static_cast<std::int64_t>(basis.size()),
                                   static_cast<std::int64_t>(d2), members ? 1 : 0});
      ok = ok && members && basis.size() == d2;
    }
    r.status = status_of(ok);
    r.certificate.note = "sampled t in {" + join(ts) +
                         "} only; per t: t, dim (I^(3))_t, dim (I^2)_t, all basis elements in I^2";
  });
}

ClaimResult verify_graded_square_agreement(HesseContext& ctx, std::span<const unsigned> degrees) {
  const std::vector<unsigned> ts(degrees.begin(), degrees.end());
  return run_claim("graded_square_agreement",
                   "(I^(2))_t = (I^2)_t and (I^(3))_t in I^2 at sampled t", [&](ClaimResult& r) {
    if (ts.empty()) {
      r.status = ClaimStatus::kVerified;
      r.certificate.note = "vacuous: no degrees sampled";
      return;
    }
    if (std::ranges::any_of(ts, [](unsigned t) { return t < 10; })) {
      throw InvalidArgument("graded agreement is asserted only for t >= 10");
    }
    bool ok = true;
    for (unsigned t : ts) {
      const std::size_t d_sym = graded_dim(ctx.symbolic(2), t);
      const std::size_t d_pow = graded_dim(ctx.power(2), t);
      // I^2 ⊆ I^(2) always, so equal dimensions give equal pieces.
      bool square_in_symbolic = true;
      for (const auto& g : ctx.power(2).generators()) {
        square_in_symbolic = square_in_symbolic && ideal_member(g, ctx.symbolic(2));
      }
      bool cube_in_square = true;
      for (const auto& g : graded_piece_basis(ctx.symbolic(3), t)) {
        if (!ideal_member(g, ctx.power(2))) {
          cube_in_square = false;
          if (r.certificate.polynomials.empty()) {
            r.certificate.polynomials = {g, normal_form(g, *ctx.power(2).groebner_basis())};
          }
        }
      }
      r.certificate.counts.insert(r.certificate.counts.end(),
                                  {static_cast<std::int64_t>(t), static_cast<std::int64_t>(d_sym),
                                   static_cast<std::int64_t>(d_pow), cube_in_square ? 1 : 0});
      ok = ok && square_in_symbolic && d_sym == d_pow && cube_in_square;
    }
    r.status = status_of(ok);
    r.certificate.note = "sampled t in {" + join(ts) +
                         "} only; per t: t, dim (I^(2))_t, dim (I^2)_t, (I^(3))_t in I^2";
  });
}

VerificationReport run_all(const VerifyOptions& options) {
  HesseContext ctx(options.tamper_points ? hesse::tampered_config() : dual_hesse_config(),
                   dual_hesse_lines(), options.groebner);
  VerificationReport report;
  auto add = [&](ClaimResult r) { report.claims.push_back(std::move(r)); };
  add(verify_incidence(ctx));
  add(verify_generators_I(ctx));
  add(verify_generators_J(ctx));
  add(verify_syzygy_identity());
  add(verify_f_formula(ctx.lines()));
  add(verify_symbolic_membership(ctx));
  add(verify_noncontainment(ctx));
  add(verify_degree9_uniqueness(ctx));
  add(verify_els_containment(ctx));
  if (!options.skip_graded) {
    report.graded_degrees = options.graded_degrees;
    add(verify_graded_equality(ctx, options.graded_degrees));
    add(verify_graded_square_agreement(ctx, options.graded_degrees));
    if (options.graded_degrees.empty()) {
      report.warnings.push_back("graded equality checked at no degree (vacuous)");
    }
  }
  report.overall = std::ranges::all_of(
      report.claims, [](const ClaimResult& c) { return c.status == ClaimStatus::kVerified; });
  for (const auto& c : report.claims) {
    if (c.status == ClaimStatus::kError) {
      report.warnings.push_back(c.claim_id + ": " + c.certificate.note);
    }
  }
  return report;
}

}  // namespace sympow
