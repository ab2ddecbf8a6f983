#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "sympow/cli.hpp"
#include "sympow/parse.hpp"

using namespace sympow;
using namespace sympow::cli;
namespace fs = std::filesystem;

namespace {

Invocation parse(std::initializer_list<std::string> args) {
  const std::vector<std::string> v(args);
  return parse_args(v);
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::initializer_list<std::string> args) {
  const std::vector<std::string> v(args);
  std::ostringstream out, err;
  const int code = run(v, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("sympow_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name, std::string_view content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p;
  }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string parse_error_message(std::string_view text) {
  try {
    parse_points(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_args") {
  CHECK(std::holds_alternative<VerifyHesseCommand>(parse({"verify-hesse"}).command));

  const auto v = std::get<VerifyHesseCommand>(
      parse({"verify-hesse", "--skip-graded", "--t", "10,12", "--format", "structured"}).command);
  CHECK(v.skip_graded);
  CHECK(v.t_values == std::vector<unsigned>{10, 12});
  CHECK(v.format == ReportFormat::kStructured);

  TempDir dir;
  const auto pts = dir.file("pts.txt", "1:0:0\n0:1:0\n");
  const auto check = std::get<CheckCommand>(
      parse({"check", "--points", pts.string(), "--m", "3", "--r", "2"}).command);
  CHECK(check.points_file == pts);
  CHECK(check.m == 3);
  CHECK(check.r == 2);

  const auto ideal = dir.file("ideal.txt", "x\n");
  const auto gb = std::get<GbCommand>(
      parse({"gb", "--ideal", ideal.string(), "--order", "lex", "--vars", "a,b"}).command);
  CHECK(gb.order == TermOrder::lex());
  CHECK(gb.variables == std::vector<std::string>{"a", "b"});

  const auto h = std::get<HilbertCommand>(
      parse({"hilbert", "--points", pts.string(), "--symbolic", "--power", "3", "--t", "1,2,3"})
          .command);
  CHECK(h.symbolic);
  CHECK(h.power == 3);
  CHECK(h.t_values == std::vector<unsigned>{1, 2, 3});

  const auto g = std::get<GenCommand>(
      parse({"gen", "random", "--count", "6", "--seed", "7", "--out", "x.txt"}).command);
  CHECK(g.family == GenCommand::Family::kRandom);
  CHECK(g.count == 6);
  CHECK(g.seed == 7);
  CHECK_FALSE(g.force);

  CHECK(parse({"--threads", "2", "verify-hesse"}).threads == 2u);

  CHECK_THROWS_AS(parse({}), UsageError);
  CHECK_THROWS_AS(parse({"check", "--m", "3"}), UsageError);
  CHECK_THROWS_AS(parse({"check", "--points", pts.string(), "--m", "x", "--r", "2"}), UsageError);
  CHECK_THROWS_AS(parse({"check", "--points", (dir / "missing").string(), "--m", "3", "--r", "2"}),
                  UsageError);
  CHECK_THROWS_AS(parse({"verify-hesse", "--bogus"}), UsageError);
  CHECK_THROWS_AS(parse({"verify-hesse", "--format", "yaml"}), UsageError);
  CHECK_THROWS_AS(parse({"gb", "--ideal", ideal.string(), "--order", "revlex"}), UsageError);
  CHECK_THROWS_AS(parse({"gen", "star", "--lines", "1", "--out", "x"}), UsageError);
  CHECK_THROWS_AS(parse({"verify-hesse", "check"}), UsageError);
}

TEST_CASE("points files") {
  const auto hesse = std::get<Configuration<CycloElement>>(parse_points(R"(# dual Hesse
1:0:0
0:1:0
0:0:1
1:1:1
1:w:w^2
1:w^2:w
w:1:1
1:w:1
1:1:w
w^2:1:1
1:w^2:1
1:1:w^2
)"));
  CHECK(hesse == dual_hesse_config());

  const auto q = std::get<Configuration<Rational>>(parse_points("1/2 : -3 : 4  # w in a comment\n\n2:0:1\n"));
  CHECK(q.size() == 2);
  CHECK(q[0] == ProjectivePoint<Rational>(Rational(1), Rational(-6), Rational(8)));

  CHECK(parse_error_message("1:0:0\n0:1:0\n1:0:0\n").find("line 3") != std::string::npos);
  CHECK(parse_error_message("1:0:0\n0:1:0\n1:0:0\n").find("same as line 1") !=
        std::string::npos);
  CHECK(parse_error_message("1:0:0\n2:0:0\n").find("duplicate") != std::string::npos);
  CHECK(parse_error_message("1:1:1\n0:0:0\n").find("line 2") != std::string::npos);
  CHECK(parse_error_message("1:1\n").find("line 1") != std::string::npos);
  CHECK(parse_error_message("1:1:q\n").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(parse_points("# nothing\n"), ParseError);
  CHECK_THROWS(parse_points_file("/nonexistent/points.txt"));
}

TEST_CASE("format_points round trips") {
  const auto star = star_configuration<Rational>(5);
  CHECK(std::get<Configuration<Rational>>(parse_points(format_points(star))) == star);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = random_rational_config(8, seed);
    CHECK(std::get<Configuration<Rational>>(parse_points(format_points(r))) == r);
  }
  const auto h = dual_hesse_config();
  CHECK(std::get<Configuration<CycloElement>>(parse_points(format_points(h))) == h);
  // No w in the text, so a star over Q(w) reads back over Q.
  const auto cstar = format_points(star_configuration<CycloElement>(4));
  CHECK(std::get<Configuration<Rational>>(parse_points(cstar)) == star_configuration<Rational>(4));
}

TEST_CASE("ideal files") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  const auto q = std::get<std::vector<Polynomial<Rational>>>(
      parse_ideal("x^2 - y  # first\n\ny*z\n", xyz));
  CHECK(q.size() == 2);
  const auto c = std::get<std::vector<Polynomial<CycloElement>>>(parse_ideal("x - w*y\n", xyz));
  CHECK(c.size() == 1);
  CHECK_THROWS_AS(parse_ideal("x +\n", xyz), ParseError);
  CHECK_THROWS_AS(parse_ideal("t^2\n", xyz), ParseError);
}

TEST_CASE("emit_report") {
  VerificationReport report;
  ClaimResult c;
  c.claim_id = "demo";
  c.description = "a demo claim";
  c.status = ClaimStatus::kVerified;
  c.certificate.polynomials = {
      parse_polynomial<CycloElement>(plane_ring<CycloElement>(), "x^2 - w*y*z")};
  c.certificate.scalar = CycloElement(Rational(3, 2));
  c.certificate.counts = {1, 2};
  c.certificate.note = "note text";
  c.elapsed_ms = 12.5;
  report.claims = {c};

  const auto text = emit_report(report, ReportFormat::kText);
  CHECK(text.find("[VERIFIED] demo: a demo claim") != std::string::npos);
  CHECK(text.find("poly: x^2 - w*y*z") != std::string::npos);
  CHECK(text.find("elapsed_ms:") != std::string::npos);
  CHECK(text.find("OVERALL: VERIFIED\n") != std::string::npos);
  CHECK(emit_report(report, ReportFormat::kText, {.include_timing = false}).find("elapsed_ms") ==
        std::string::npos);
  CHECK(report_exit_code(report) == 0);

  const auto doc = nlohmann::json::parse(emit_report(report, ReportFormat::kStructured));
  REQUIRE(doc["claims"].size() == 1);
  const auto& rec = doc["claims"][0];
  CHECK(rec["claim_id"] == "demo");
  CHECK(rec["status"] == "VERIFIED");
  CHECK(rec["elapsed_ms"].get<double>() == doctest::Approx(12.5));
  CHECK(rec["certificate"]["polynomials"][0] == "x^2 - w*y*z");
  CHECK(rec["certificate"]["counts"] == nlohmann::json::array({1, 2}));
  CHECK(doc["overall"] == true);
  const auto no_time = nlohmann::json::parse(
      emit_report(report, ReportFormat::kStructured, {.include_timing = false}));
  CHECK_FALSE(no_time["claims"][0].contains("elapsed_ms"));

  report.claims[0].status = ClaimStatus::kRefuted;
  report.overall = false;
  CHECK(emit_report(report, ReportFormat::kText).find("OVERALL: REFUTED") != std::string::npos);
  CHECK(report_exit_code(report) == 1);
  report.claims[0].status = ClaimStatus::kError;
  CHECK(emit_report(report, ReportFormat::kText).find("OVERALL: ERROR") != std::string::npos);
  CHECK(report_exit_code(report) == 2);

  const VerificationReport empty;
  const auto vacuous = emit_report(empty, ReportFormat::kText);
  CHECK(vacuous.find("OVERALL: VERIFIED (vacuous)") != std::string::npos);
  CHECK(vacuous.find("WARNING:") != std::string::npos);
  const auto vdoc = nlohmann::json::parse(emit_report(empty, ReportFormat::kStructured));
  CHECK(vdoc["claims"].empty());
  CHECK_FALSE(vdoc["warnings"].empty());
}

TEST_CASE("gen, check and hilbert") {
  TempDir dir;
  const auto out = (dir / "hesse.txt").string();
  auto r = run_cli({"gen", "hesse", "--out", out});
  CHECK(r.code == 0);
  const auto written = slurp(out);
  CHECK(std::get<Configuration<CycloElement>>(parse_points(written)) == dual_hesse_config());

  r = run_cli({"gen", "star", "--lines", "4", "--out", out});
  CHECK(r.code == 2);
  CHECK(slurp(out) == written);
  r = run_cli({"gen", "star", "--lines", "4", "--out", out, "--force"});
  CHECK(r.code == 0);
  CHECK(std::get<Configuration<Rational>>(parse_points_file(out)).size() == 6);

  const auto star = (dir / "star.txt").string();
  CHECK(run_cli({"gen", "star", "--lines", "4", "--out", star}).code == 0);
  r = run_cli({"check", "--points", star, "--m", "3", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("HOLDS") != std::string::npos);
  const auto before = slurp(star);

  const auto hesse = (dir / "hesse2.txt").string();
  CHECK(run_cli({"gen", "hesse", "--out", hesse}).code == 0);
  r = run_cli({"check", "--points", hesse, "--m", "3", "--r", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.find("I^(3) in I^2: FAILS") != std::string::npos);
  CHECK(r.out.find("witness: ") != std::string::npos);
  r = run_cli({"check", "--points", hesse, "--m", "4", "--r", "2"});
  CHECK(r.code == 0);

  r = run_cli({"hilbert", "--points", hesse, "--symbolic", "--power", "3", "--t", "8,9"});
  CHECK(r.code == 0);
  CHECK(r.out == "# t dim I^(3)_t\n8 0\n9 1\n");
  r = run_cli({"hilbert", "--points", hesse, "--power", "2", "--t", "9"});
  CHECK(r.out == "# t dim I^2_t\n9 18\n");
  CHECK(slurp(star) == before);

  const auto bad = dir.file("bad.txt", "1:0:0\n1:0:0\n");
  r = run_cli({"check", "--points", bad.string(), "--m", "3", "--r", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("gb") {
  TempDir dir;
  const auto ideal = dir.file("ideal.txt", "x^2 - y\nx*y - 1\n");
  auto r = run_cli({"gb", "--ideal", ideal.string(), "--order", "lex"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# reduced lex basis, 2 elements\n", 0) == 0);
  r = run_cli({"gb", "--ideal", ideal.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# reduced grevlex basis", 0) == 0);
  const auto unit = dir.file("unit.txt", "x\nx - 1\n");
  r = run_cli({"gb", "--ideal", unit.string()});
  CHECK(r.out == "# reduced grevlex basis, 1 elements\n1\n");
}

TEST_CASE("exit codes are total") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"check", "--m", "3"}).code == 2);
  const auto r = run_cli({"verify-hesse", "--t", "9"});
  CHECK(r.code == 2);
  CHECK(r.out.find("OVERALL: ERROR") != std::string::npos);
}
