#include <json.hpp>
#include <sstream>

#include "internal.hpp"
#include "sympow/parse.hpp"

namespace sympow::cli {

namespace {

bool any_error(const VerificationReport& report) {
  for (const auto& c : report.claims) {
    if (c.status == ClaimStatus::kError) return true;
  }
  return false;
}

std::string overall_line(const VerificationReport& report) {
  if (report.claims.empty()) return "OVERALL: VERIFIED (vacuous)";
  if (report.overall) return "OVERALL: VERIFIED";
  return any_error(report) ? "OVERALL: ERROR" : "OVERALL: REFUTED";
}

std::vector<std::string> all_warnings(const VerificationReport& report) {
  auto w = report.warnings;
  if (report.claims.empty()) w.insert(w.begin(), "no claims were checked");
  return w;
}

const ClaimResult* find_claim(const VerificationReport& report, std::string_view id) {
  for (const auto& c : report.claims) {
    if (c.claim_id == id) return &c;
  }
  return nullptr;
}

std::string emit_text(const VerificationReport& report, const EmitOptions& options) {
  std::ostringstream out;
  for (const auto& c : report.claims) {
    out << "[" << status_name(c.status) << "] " << c.claim_id << ": " << c.description << "\n";
    const auto& cert = c.certificate;
    if (!cert.note.empty()) out << "  note: " << cert.note << "\n";
    for (const auto& p : cert.polynomials) out << "  poly: " << format_polynomial(p) << "\n";
    if (cert.scalar) out << "  scalar: " << format_scalar(*cert.scalar) << "\n";
    if (!cert.counts.empty()) {
      out << "  counts:";
      for (auto n : cert.counts) out << " " << n;
      out << "\n";
    }
    if (options.include_timing) out << "  elapsed_ms: " << c.elapsed_ms << "\n";
  }
  if (!report.graded_degrees.empty()) {
    out << "graded claims sampled at t =";
    for (auto t : report.graded_degrees) out << " " << t;
    out << "; larger t not checked\n";
  }
  if (const auto* c = find_claim(report, "f_not_in_square");
      c && c->status == ClaimStatus::kVerified) {
    out << "RESULT: I^(3) is not contained in I^2 (f has a nonzero remainder modulo I^2)\n";
  }
  for (const auto& w : all_warnings(report)) out << "WARNING: " << w << "\n";
  out << overall_line(report) << "\n";
  return out.str();
}

std::string emit_structured(const VerificationReport& report, const EmitOptions& options) {
  using nlohmann::json;
  json claims = json::array();
  for (const auto& c : report.claims) {
    json cert;
    cert["polynomials"] = json::array();
    for (const auto& p : c.certificate.polynomials) cert["polynomials"].push_back(format_polynomial(p));
    cert["scalar"] = c.certificate.scalar ? json(format_scalar(*c.certificate.scalar)) : json();
    cert["counts"] = c.certificate.counts;
    cert["note"] = c.certificate.note;
    json rec{{"claim_id", c.claim_id},
             {"description", c.description},
             {"status", status_name(c.status)},
             {"certificate", std::move(cert)}};
    if (options.include_timing) rec["elapsed_ms"] = c.elapsed_ms;
    claims.push_back(std::move(rec));
  }
  json doc{{"claims", std::move(claims)},
           {"overall", report.overall},
           {"summary", overall_line(report)},
           {"graded_degrees", report.graded_degrees},
           {"warnings", all_warnings(report)}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format,
                        const EmitOptions& options) {
  return format == ReportFormat::kText ? emit_text(report, options)
                                       : emit_structured(report, options);
}

int report_exit_code(const VerificationReport& report) {
  if (any_error(report)) return kExitError;
  return report.overall ? kExitOk : kExitFails;
}

}  // namespace sympow::cli
