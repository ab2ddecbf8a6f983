#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sympow/verify.hpp"

namespace sympow::cli {

/// Bad command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitFails = 1, kExitError = 2 };

enum class ReportFormat { kText, kStructured };

struct VerifyHesseCommand {
  bool skip_graded = false;
  std::vector<unsigned> t_values{10, 11, 12};
  ReportFormat format = ReportFormat::kText;
};

struct CheckCommand {
  std::filesystem::path points_file;
  unsigned m = 0;
  unsigned r = 0;
};

struct GbCommand {
  std::filesystem::path ideal_file;
  TermOrder order = TermOrder::grevlex();
  std::vector<std::string> variables{"x", "y", "z"};
};

struct HilbertCommand {
  std::filesystem::path points_file;
  unsigned power = 1;
  bool symbolic = false;
  std::vector<unsigned> t_values;
};

struct GenCommand {
  enum class Family { kStar, kRandom, kHesse };
  Family family = Family::kHesse;
  unsigned lines = 0;  ///< star
  unsigned count = 0;  ///< random
  std::uint64_t seed = 0;
  std::filesystem::path out_file;
  bool force = false;
};

using Command =
    std::variant<VerifyHesseCommand, CheckCommand, GbCommand, HilbertCommand, GenCommand>;

struct Invocation {
  Command command;
  std::optional<unsigned> threads;
};

/// Parses argv without the program name. Throws UsageError.
Invocation parse_args(std::span<const std::string> args);

// ---------------------------------------------------------------------------
// File formats

using AnyConfiguration = std::variant<Configuration<Rational>, Configuration<CycloElement>>;

/// One point per line, `c0 : c1 : c2`; `#` starts a comment. The field is
/// Q(w) iff `w` appears outside comments. Throws ParseError with the line.
AnyConfiguration parse_points(std::string_view text);
AnyConfiguration parse_points_file(const std::filesystem::path& path);

template <CoefficientField F>
std::string format_points(const Configuration<F>& c);

using AnyGenerators = std::variant<std::vector<Polynomial<Rational>>,
                                   std::vector<Polynomial<CycloElement>>>;

/// One generator per line in the polynomial grammar over the given
/// variables; `#` comments and blank lines ignored.
AnyGenerators parse_ideal(std::string_view text, std::span<const std::string> variables,
                          TermOrder order = TermOrder::grevlex());
AnyGenerators parse_ideal_file(const std::filesystem::path& path,
                               std::span<const std::string> variables,
                               TermOrder order = TermOrder::grevlex());

// ---------------------------------------------------------------------------
// Output

struct EmitOptions {
  /// Timing lines are kept separate (`elapsed_ms:` lines / key) so they can
  /// be masked or dropped.
  bool include_timing = true;
};

std::string emit_report(const VerificationReport& report, ReportFormat format,
                        const EmitOptions& options = {});

/// Exit code for a finished verification report.
int report_exit_code(const VerificationReport& report);

// ---------------------------------------------------------------------------
// Execution

int execute(const Invocation& invocation, std::ostream& out, std::ostream& err);

/// parse_args + execute; every failure maps to an exit code in {0, 1, 2}.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sympow::cli
