#include <fstream>
#include <sstream>

#include "internal.hpp"
#include "sympow/parse.hpp"

namespace sympow::cli {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (auto t = trim(raw); !t.empty()) out.push_back({number, std::move(t)});
    pos = end + 1;
  }
  return out;
}

bool any_mentions_omega(const std::vector<Line>& lines) {
  for (const auto& l : lines) {
    if (mentions_omega(l.text)) return true;
  }
  return false;
}

template <CoefficientField F>
Configuration<F> points_from_lines(const std::vector<Line>& lines) {
  std::vector<ProjectivePoint<F>> points;
  std::vector<std::size_t> origin;
  for (const auto& line : lines) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t colon; (colon = line.text.find(':', start)) != std::string::npos;) {
      parts.push_back(line.text.substr(start, colon - start));
      start = colon + 1;
    }
    parts.push_back(line.text.substr(start));
    if (parts.size() != 3) {
      throw ParseError("expected three coordinates 'c0 : c1 : c2'", line.number);
    }
    std::array<F, 3> c;
    for (std::size_t i = 0; i < 3; ++i) {
      try {
        c[i] = parse_scalar<F>(trim(parts[i]));
      } catch (const Error& e) {
        throw ParseError("coordinate " + std::to_string(i) + ": " + e.what(), line.number);
      }
    }
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) {
      throw ParseError("all coordinates are zero", line.number);
    }
    ProjectivePoint<F> p(c[0], c[1], c[2]);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (points[j] == p) {
        throw ParseError("duplicate point (same as line " + std::to_string(origin[j]) + ")",
                         line.number);
      }
    }
    points.push_back(std::move(p));
    origin.push_back(line.number);
  }
  if (points.empty()) throw ParseError("no points");
  return Configuration<F>(std::move(points));
}

template <CoefficientField F>
std::vector<Polynomial<F>> generators_from_lines(const std::vector<Line>& lines,
                                                 const RingPtr& ring, TermOrder order) {
  std::vector<Polynomial<F>> out;
  for (const auto& line : lines) {
    try {
      out.push_back(parse_polynomial<F>(ring, line.text, order));
    } catch (const Error& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  return out;
}

}  // namespace

AnyConfiguration parse_points(std::string_view text) {
  const auto lines = content_lines(text);
  if (any_mentions_omega(lines)) return points_from_lines<CycloElement>(lines);
  return points_from_lines<Rational>(lines);
}

AnyConfiguration parse_points_file(const std::filesystem::path& path) {
  return parse_points(read_file(path));
}

template <CoefficientField F>
std::string format_points(const Configuration<F>& c) {
  std::string out;
  for (const auto& p : c) {
    out += format_scalar(p[0]) + " : " + format_scalar(p[1]) + " : " + format_scalar(p[2]) + "\n";
  }
  return out;
}

template std::string format_points<Rational>(const Configuration<Rational>&);
template std::string format_points<CycloElement>(const Configuration<CycloElement>&);

AnyGenerators parse_ideal(std::string_view text, std::span<const std::string> variables,
                          TermOrder order) {
  const auto lines = content_lines(text);
  std::vector<std::string> names(variables.begin(), variables.end());
  if (any_mentions_omega(lines)) {
    return generators_from_lines<CycloElement>(
        lines, Ring::make(std::move(names), FieldKind::kCyclotomic3), order);
  }
  return generators_from_lines<Rational>(lines, Ring::make(std::move(names), FieldKind::kRational),
                                         order);
}

AnyGenerators parse_ideal_file(const std::filesystem::path& path,
                               std::span<const std::string> variables, TermOrder order) {
  return parse_ideal(read_file(path), variables, order);
}

}  // namespace sympow::cli
