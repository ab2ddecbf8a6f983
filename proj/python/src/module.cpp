#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "sympow/cli.hpp"
#include "sympow/parse.hpp"

namespace py = pybind11;
using namespace sympow;

namespace {

std::string verify_hesse(bool skip_graded, std::vector<unsigned> t, bool tamper) {
  VerifyOptions options;
  options.skip_graded = skip_graded;
  options.graded_degrees = std::move(t);
  options.tamper_points = tamper;
  VerificationReport report;
  {
    py::gil_scoped_release release;
    report = run_all(options);
  }
  return cli::emit_report(report, cli::ReportFormat::kStructured);
}

py::tuple check(const std::string& points, unsigned m, unsigned r) {
  const auto config = cli::parse_points(points);
  std::optional<std::pair<std::string, std::string>> witness;
  {
    py::gil_scoped_release release;
    std::visit(
        [&](const auto& c) {
          const auto w = find_uncontained_generator(ideal_power(radical_ideal(c), r),
                                                    symbolic_power(c, m));
          if (w) witness.emplace(format_polynomial(w->generator), format_polynomial(w->remainder));
        },
        config);
  }
  if (!witness) return py::make_tuple(true, py::none(), py::none());
  return py::make_tuple(false, witness->first, witness->second);
}

std::vector<std::size_t> graded_dims(const std::string& points, unsigned power, bool symbolic,
                                     const std::vector<unsigned>& t) {
  return std::visit(
      [&](const auto& config) {
        py::gil_scoped_release release;
        const auto ideal =
            symbolic ? symbolic_power(config, power) : ideal_power(radical_ideal(config), power);
        std::vector<std::size_t> dims;
        for (unsigned d : t) dims.push_back(graded_dim(ideal, d));
        return dims;
      },
      cli::parse_points(points));
}

std::vector<std::string> groebner_basis(const std::string& ideal, const std::string& order,
                                        const std::vector<std::string>& variables) {
  const TermOrder o = TermOrder::parse(order);
  return std::visit(
      [&](const auto& gens) {
        std::vector<std::string> out;
        if (gens.empty()) return out;
        using Poly = typename std::decay_t<decltype(gens)>::value_type;
        const Ideal<typename Poly::Coefficient> i(gens.front().ring(), gens);
        for (const auto& g : i.groebner_basis(o)->elements()) out.push_back(format_polynomial(g));
        return out;
      },
      cli::parse_ideal(ideal, variables, o));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_sympow, m) {
  m.doc() = "Containment of symbolic and ordinary powers of point ideals in P^2";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  m.def("verify_hesse", &verify_hesse, py::arg("skip_graded") = false,
        py::arg("t") = std::vector<unsigned>{10, 11, 12}, py::arg("tamper") = false,
        "Run every dual Hesse claim; returns the structured report as JSON text.");
  m.def("check", &check, py::arg("points"), py::arg("m"), py::arg("r"),
        "(holds, witness, remainder) for I^(m) in I^r; points in the file format.");
  m.def("graded_dims", &graded_dims, py::arg("points"), py::arg("power"),
        py::arg("symbolic") = false, py::arg("t"));
  m.def("groebner_basis", &groebner_basis, py::arg("ideal"), py::arg("order") = "grevlex",
        py::arg("variables") = std::vector<std::string>{"x", "y", "z"});
  m.def("star_points", [](unsigned s) { return cli::format_points(star_configuration<Rational>(s)); },
        py::arg("lines"));
  m.def("random_points",
        [](unsigned k, std::uint64_t seed) { return cli::format_points(random_rational_config(k, seed)); },
        py::arg("count"), py::arg("seed"));
  m.def("hesse_points", [] { return cli::format_points(dual_hesse_config()); });
  m.def("run_cli", &run_cli, py::arg("args"), "(exit code, stdout, stderr) of the command line.");
}
