#include "sympow/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace sympow {

namespace {

struct Token {
  enum class Kind { kNumber, kIdent, kOp, kEnd };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::kNumber, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::kIdent, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::kOp, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) +
                       "' at column " + std::to_string(i + 1));
    }
  }
  out.push_back({Token::Kind::kEnd, "", s.size()});
  return out;
}

// Value algebra for the scalar parser.
template <CoefficientField F>
struct ScalarAlgebra {
  using Value = F;
  Value number(const mpz_class& n) const { return F::from_rational(Rational(n)); }
  Value identifier(const std::string& name) const {
    if (name == "w") {
      if constexpr (F::kind == FieldKind::kCyclotomic3) {
        return CycloElement::omega();
      } else {
        throw ParseError("'w' is not available over Q");
      }
    }
    throw ParseError("unexpected identifier '" + name + "' in a constant");
  }
  Value divide(const Value& a, const Value& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    return a / b;
  }
  static Value one() { return F::one(); }
};

template <CoefficientField F>
struct PolynomialAlgebra {
  using Value = Polynomial<F>;
  RingPtr ring;
  TermOrder order;

  Value number(const mpz_class& n) const {
    return Value::constant(ring, F::from_rational(Rational(n)), order);
  }
  Value identifier(const std::string& name) const {
    if (auto index = ring->index_of(name)) return Value::variable(ring, *index, order);
    return Value::constant(ring, ScalarAlgebra<F>{}.identifier(name), order);
  }
  Value divide(const Value& a, const Value& b) const {
    if (!b.is_constant() || b.is_zero()) {
      throw ParseError("divisor must be a nonzero constant");
    }
    return a.scaled(b.leading_coeff().inverse());
  }
  Value one() const { return Value::constant(ring, F::one(), order); }
};

template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(std::string_view text, Algebra algebra)
      : tokens_(tokenize(text)), algebra_(std::move(algebra)) {}

  Value parse() {
    if (peek().kind == Token::Kind::kEnd) throw ParseError("empty expression");
    Value v = expr();
    if (peek().kind != Token::Kind::kEnd) {
      const Token& t = peek();
      if (t.kind != Token::Kind::kOp || t.text == "(") {
        throw ParseError("implicit multiplication before '" + t.text + "' at column " +
                         std::to_string(t.pos + 1) + " (use '*')");
      }
      throw ParseError("unexpected '" + t.text + "' at column " + std::to_string(t.pos + 1));
    }
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(const char* op) {
    if (peek().kind == Token::Kind::kOp && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept("+")) {
        v += term();
      } else if (accept("-")) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (accept("*")) {
        v = v * factor();
      } else if (accept("/")) {
        v = algebra_.divide(v, factor());
      } else {
        return v;
      }
    }
  }

  Value factor() {
    if (accept("-")) return -factor();
    if (accept("+")) return factor();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!accept("^")) return base;
    const Token& t = peek();
    if (t.kind != Token::Kind::kNumber) {
      throw ParseError("exponent must be a non-negative integer at column " +
                       std::to_string(t.pos + 1));
    }
    const mpz_class e(t.text, 10);
    ++pos_;
    if (e > Monomial::kMaxExponent) throw ParseError("exponent too large: " + t.text);
    Value result = algebra_.one();
    for (unsigned long k = e.get_ui(); k > 0; k >>= 1) {
      if (k & 1) result = result * base;
      if (k > 1) base = base * base;
    }
    return result;
  }

  Value primary() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::kNumber:
        ++pos_;
        return algebra_.number(mpz_class(t.text, 10));
      case Token::Kind::kIdent:
        ++pos_;
        return algebra_.identifier(t.text);
      case Token::Kind::kOp:
        if (t.text == "(") {
          ++pos_;
          Value v = expr();
          if (!accept(")")) {
            throw ParseError("expected ')' at column " + std::to_string(peek().pos + 1));
          }
          return v;
        }
        break;
      case Token::Kind::kEnd:
        throw ParseError("unexpected end of expression");
    }
    throw ParseError("unexpected '" + t.text + "' at column " + std::to_string(t.pos + 1));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Algebra algebra_;
};

}  // namespace

template <CoefficientField F>
F parse_scalar(std::string_view text) {
  return Parser<ScalarAlgebra<F>>(text, ScalarAlgebra<F>{}).parse();
}

template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr& ring, std::string_view text, TermOrder order) {
  return Parser<PolynomialAlgebra<F>>(text, PolynomialAlgebra<F>{ring, order}).parse();
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

template <CoefficientField F>
std::string format_polynomial(const Polynomial<F>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const bool single = f.size() == 1;
  for (const auto& t : f.terms()) {
    std::string text;
    if (t.mono.is_one()) {
      text = format_scalar(t.coeff);
      if (is_compound(t.coeff) && !single) text = "(" + text + ")";
    } else {
      const std::string mono = format_monomial(*f.ring(), t.mono);
      if (t.coeff.is_one()) {
        text = mono;
      } else if ((-t.coeff).is_one()) {
        text = "-" + mono;
      } else if (is_compound(t.coeff)) {
        text = "(" + format_scalar(t.coeff) + ")*" + mono;
      } else {
        text = format_scalar(t.coeff) + "*" + mono;
      }
    }
    if (out.empty()) {
      out = text;
    } else if (text.front() == '-') {
      out += " - " + text.substr(1);
    } else {
      out += " + " + text;
    }
  }
  return out;
}

bool mentions_omega(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      if (text.substr(i, j - i) == "w") return true;
      i = j;
    } else {
      ++i;
    }
  }
  return false;
}

template Rational parse_scalar<Rational>(std::string_view);
template CycloElement parse_scalar<CycloElement>(std::string_view);
template Polynomial<Rational> parse_polynomial<Rational>(const RingPtr&, std::string_view,
                                                         TermOrder);
template Polynomial<CycloElement> parse_polynomial<CycloElement>(const RingPtr&,
                                                                 std::string_view, TermOrder);
template std::string format_polynomial<Rational>(const Polynomial<Rational>&);
template std::string format_polynomial<CycloElement>(const Polynomial<CycloElement>&);

}  // namespace sympow
