#include <fstream>
#include <ostream>

#include "internal.hpp"
#include "sympow/parallel.hpp"
#include "sympow/parse.hpp"

namespace sympow::cli {

namespace {

std::string power_name(unsigned m, bool symbolic) {
  return symbolic ? "I^(" + std::to_string(m) + ")" : "I^" + std::to_string(m);
}

int run_verify(const VerifyHesseCommand& cmd, std::ostream& out) {
  VerifyOptions options;
  options.skip_graded = cmd.skip_graded;
  options.graded_degrees = cmd.t_values;
  const auto report = run_all(options);
  out << emit_report(report, cmd.format);
  return report_exit_code(report);
}

int run_check(const CheckCommand& cmd, std::ostream& out) {
  return std::visit(
      [&](const auto& config) {
        const auto symbolic = symbolic_power(config, cmd.m);
        const auto ordinary = ideal_power(radical_ideal(config), cmd.r);
        const auto witness = find_uncontained_generator(ordinary, symbolic);
        out << "points: " << config.size() << "\n";
        out << power_name(cmd.m, true) << " in " << power_name(cmd.r, false) << ": "
            << (witness ? "FAILS" : "HOLDS") << "\n";
        if (!witness) return static_cast<int>(kExitOk);
        out << "witness: " << format_polynomial(witness->generator) << "\n";
        out << "remainder: " << format_polynomial(witness->remainder) << "\n";
        return static_cast<int>(kExitFails);
      },
      parse_points_file(cmd.points_file));
}

int run_gb(const GbCommand& cmd, std::ostream& out) {
  return std::visit(
      [&](const auto& gens) {
        using Poly = typename std::decay_t<decltype(gens)>::value_type;
        if (gens.empty()) {
          out << "# reduced " << cmd.order.to_string() << " basis, 0 elements\n";
          return static_cast<int>(kExitOk);
        }
        const Ideal<typename Poly::Coefficient> ideal(gens.front().ring(), gens);
        const auto basis = ideal.groebner_basis(cmd.order);
        out << "# reduced " << cmd.order.to_string() << " basis, " << basis->size()
            << " elements\n";
        for (const auto& g : basis->elements()) out << format_polynomial(g) << "\n";
        return static_cast<int>(kExitOk);
      },
      parse_ideal_file(cmd.ideal_file, cmd.variables, cmd.order));
}

int run_hilbert(const HilbertCommand& cmd, std::ostream& out) {
  std::visit(
      [&](const auto& config) {
        const auto ideal = cmd.symbolic ? symbolic_power(config, cmd.power)
                                        : ideal_power(radical_ideal(config), cmd.power);
        out << "# t dim " << power_name(cmd.power, cmd.symbolic) << "_t\n";
        for (unsigned t : cmd.t_values) out << t << " " << graded_dim(ideal, t) << "\n";
      },
      parse_points_file(cmd.points_file));
  return kExitOk;
}

int run_gen(const GenCommand& cmd, std::ostream& out, std::ostream& err) {
  if (std::filesystem::exists(cmd.out_file) && !cmd.force) {
    err << "error: " << cmd.out_file.string() << " exists (use --force to overwrite)\n";
    return kExitError;
  }
  std::string header;
  std::string body;
  switch (cmd.family) {
    case GenCommand::Family::kStar:
      header = "# star configuration of " + std::to_string(cmd.lines) + " lines\n";
      body = format_points(star_configuration<Rational>(cmd.lines));
      break;
    case GenCommand::Family::kRandom:
      header = "# " + std::to_string(cmd.count) + " random rational points, seed " +
               std::to_string(cmd.seed) + "\n";
      body = format_points(random_rational_config(cmd.count, cmd.seed));
      break;
    case GenCommand::Family::kHesse:
      header = "# dual Hesse configuration, w a primitive cube root of unity\n";
      body = format_points(dual_hesse_config());
      break;
  }
  std::ofstream file(cmd.out_file, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << cmd.out_file.string() << "\n";
    return kExitError;
  }
  file << header << body;
  if (!file.flush()) {
    err << "error: write failed for " << cmd.out_file.string() << "\n";
    return kExitError;
  }
  out << "wrote " << cmd.out_file.string() << "\n";
  return kExitOk;
}

}  // namespace

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
  if (inv.threads) set_thread_count(*inv.threads);
  return std::visit(
      [&](const auto& cmd) -> int {
        using T = std::decay_t<decltype(cmd)>;
        if constexpr (std::is_same_v<T, VerifyHesseCommand>) {
          return run_verify(cmd, out);
        } else if constexpr (std::is_same_v<T, CheckCommand>) {
          return run_check(cmd, out);
        } else if constexpr (std::is_same_v<T, GbCommand>) {
          return run_gb(cmd, out);
        } else if constexpr (std::is_same_v<T, HilbertCommand>) {
          return run_hilbert(cmd, out);
        } else {
          return run_gen(cmd, out, err);
        }
      },
      inv.command);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_args(args);
  } catch (const UsageError& e) {
    if (is_help_request(e)) {
      out << e.what();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitError;
  }
  try {
    return execute(inv, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace sympow::cli
