#include <CLI11.hpp>

#include "internal.hpp"

namespace sympow::cli {

namespace {

// `--help` is answered with the help text as the "error" message; run()
// prints it on stdout and exits 0.
class HelpRequested : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace

bool is_help_request(const UsageError& e) { return dynamic_cast<const HelpRequested*>(&e); }

Invocation parse_args(std::span<const std::string> args) {
  CLI::App app{"Containment of symbolic and ordinary powers of point ideals in P^2", "sympow"};
  app.require_subcommand(1, 1);

  unsigned threads = 0;
  auto* threads_opt = app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  VerifyHesseCommand verify;
  std::string format = "text";
  auto* verify_cmd = app.add_subcommand("verify-hesse", "Check every claim about the dual Hesse configuration");
  verify_cmd->add_flag("--skip-graded", verify.skip_graded, "Omit the graded-piece claims");
  verify_cmd->add_option("--t", verify.t_values, "Degrees sampled by the graded claims")
      ->delimiter(',')
      ->expected(0, -1);
  verify_cmd->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CheckCommand check;
  auto* check_cmd = app.add_subcommand("check", "Decide I^(m) ⊆ I^r for a point file");
  check_cmd->add_option("--points", check.points_file, "Point file")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--m", check.m, "Symbolic power")->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--r", check.r, "Ordinary power")->required()->check(CLI::PositiveNumber);

  GbCommand gb;
  std::string order = "grevlex";
  auto* gb_cmd = app.add_subcommand("gb", "Reduced Groebner basis of an ideal file");
  gb_cmd->add_option("--ideal", gb.ideal_file, "Ideal file")->required()->check(CLI::ExistingFile);
  gb_cmd->add_option("--order", order, "lex or grevlex")
      ->check(CLI::IsMember({"lex", "grevlex", "dp"}));
  gb_cmd->add_option("--vars", gb.variables, "Ring variables")->delimiter(',');

  HilbertCommand hilbert;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Graded dimensions of a power of a point ideal");
  hilbert_cmd->add_option("--points", hilbert.points_file, "Point file")->required()->check(CLI::ExistingFile);
  hilbert_cmd->add_flag("--symbolic", hilbert.symbolic, "Use the symbolic power");
  hilbert_cmd->add_option("--power", hilbert.power, "Exponent M")->check(CLI::PositiveNumber);
  hilbert_cmd->add_option("--t", hilbert.t_values, "Degrees")->required()->delimiter(',');

  GenCommand gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a point file");
  gen_cmd->require_subcommand(1, 1);
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", gen.out_file, "Output file")->required();
    sub->add_flag("--force", gen.force, "Overwrite an existing file");
  };
  auto* star_cmd = gen_cmd->add_subcommand("star", "Star configuration of s general lines");
  star_cmd->add_option("--lines", gen.lines, "Number of lines")->required()->check(CLI::Range(2u, 64u));
  add_out(star_cmd);
  auto* random_cmd = gen_cmd->add_subcommand("random", "Random rational points");
  random_cmd->add_option("--count", gen.count, "Number of points")->required()->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", gen.seed, "Seed")->required();
  add_out(random_cmd);
  auto* hesse_cmd = gen_cmd->add_subcommand("hesse", "The twelve dual Hesse points");
  add_out(hesse_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Invocation inv;
  if (threads_opt->count() > 0) inv.threads = threads;
  if (verify_cmd->parsed()) {
    verify.format = format == "structured" ? ReportFormat::kStructured : ReportFormat::kText;
    inv.command = verify;
  } else if (check_cmd->parsed()) {
    inv.command = check;
  } else if (gb_cmd->parsed()) {
    gb.order = TermOrder::parse(order);
    if (gb.variables.empty()) throw UsageError("--vars: at least one variable required");
    inv.command = gb;
  } else if (hilbert_cmd->parsed()) {
    inv.command = hilbert;
  } else {
    if (star_cmd->parsed()) {
      gen.family = GenCommand::Family::kStar;
    } else if (random_cmd->parsed()) {
      gen.family = GenCommand::Family::kRandom;
    } else {
      gen.family = GenCommand::Family::kHesse;
    }
    inv.command = gen;
  }
  return inv;
}

}  // namespace sympow::cli
