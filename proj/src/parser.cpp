#include "germlab/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace germlab {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

/// Intermediate sparse polynomial keyed by variable name, so the variable
/// list can be fixed after the whole input has been read.
using NameMonomial = std::map<std::string, int>;
using NamePoly = std::map<NameMonomial, ExactScalar>;

NamePoly constant(const ExactScalar& c) {
  NamePoly p;
  if (!c.is_zero()) p[{}] = c;
  return p;
}

void accumulate(NamePoly& into, const NameMonomial& m, const ExactScalar& c) {
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

NamePoly multiply(const NamePoly& lhs, const NamePoly& rhs) {
  NamePoly out;
  for (const auto& [ml, cl] : lhs) {
    for (const auto& [mr, cr] : rhs) {
      NameMonomial m = ml;
      for (const auto& [name, e] : mr) m[name] += e;
      accumulate(out, m, cl * cr);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  NamePoly parse() {
    NamePoly p = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NamePoly expression() {
    NamePoly total;
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      NamePoly t = term();
      for (const auto& [m, coeff] : t) accumulate(total, m, sign < 0 ? -coeff : coeff);
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return total;
  }

  bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  NamePoly term() {
    NamePoly p = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = multiply(p, power());
      } else if (c == '/') {
        std::size_t at = ++pos_;
        NamePoly d = power();
        if (d.size() != 1 || !d.begin()->first.empty()) throw ParseError("division by a non-constant", at);
        ExactScalar inv = d.begin()->second.inverse();
        for (auto& [m, coeff] : p) coeff *= inv;
      } else if (starts_factor(c)) {
        p = multiply(p, power());
      } else {
        break;
      }
    }
    return p;
  }

  NamePoly power() {
    NamePoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", start);
      if (pos_ - start > 4) throw ParseError("exponent too large", start);
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      NamePoly out = constant(ExactScalar(1));
      for (int i = 0; i < e; ++i) out = multiply(out, base);
      return out;
    }
    return base;
  }

  NamePoly primary() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      NamePoly inner = expression();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == '-' || c == '+') {
      ++pos_;
      NamePoly inner = power();
      if (c == '-') {
        for (auto& [m, coeff] : inner) coeff = -coeff;
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(ExactScalar(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (text_.substr(start, 5) == "sqrt(") {
      pos_ += 5;
      std::size_t digits = pos_;
      if (peek() == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_ || pos_ - digits > 9 || peek() != ')') throw ParseError("malformed sqrt", start);
      long d = std::stol(std::string(text_.substr(digits, pos_ - digits)));
      ++pos_;
      if (options_.radicand == 0 || d != options_.radicand) throw ParseError("sqrt(d) needs --field Q(d)", start);
      return constant(ExactScalar::quadratic(0, 1, d));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "r") {
        if (options_.radicand == 0) throw ParseError("symbol r needs --field Q(d)", start);
        return constant(ExactScalar::quadratic(0, 1, options_.radicand));
      }
      NamePoly p;
      p[{{name, 1}}] = ExactScalar(1);
      positions_.emplace(name, start);
      return p;
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;

 public:
  std::multimap<std::string, std::size_t> positions_;
};

Polynomial build(const NamePoly& p, const Variables& variables, const std::multimap<std::string, std::size_t>& positions) {
  Polynomial out(variables);
  for (const auto& [name, pos] : positions) {
    if (std::find(variables->begin(), variables->end(), name) == variables->end()) {
      throw ParseError("unknown variable '" + name + "'", pos);
    }
  }
  for (const auto& [m, c] : p) {
    std::vector<int> exps(variables->size(), 0);
    for (const auto& [name, e] : m) {
      auto it = std::find(variables->begin(), variables->end(), name);
      exps[static_cast<std::size_t>(it - variables->begin())] += e;
    }
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& variables, const ParseOptions& options) {
  Parser parser(text, options);
  NamePoly p = parser.parse();
  return build(p, variables, parser.positions_);
}

Polynomial parse_form(std::string_view text, const ParseOptions& options) {
  Parser parser(text, options);
  NamePoly p = parser.parse();
  static const std::set<std::string> xyz = {"x", "y", "z"};
  static const std::set<std::string> indexed = {"z1", "z2", "z3"};
  bool uses_xyz = false;
  bool uses_indexed = false;
  for (const auto& [name, pos] : parser.positions_) {
    bool is_parameter = std::find(options.parameters.begin(), options.parameters.end(), name) != options.parameters.end();
    if (is_parameter) continue;
    if (xyz.count(name)) {
      uses_xyz = true;
    } else if (indexed.count(name)) {
      uses_indexed = true;
    } else {
      throw ParseError("unknown variable '" + name + "'", pos);
    }
    if (uses_xyz && uses_indexed) throw ParseError("mixed variable families", pos);
  }
  bool third = parser.positions_.count(uses_xyz ? "z" : "z3") > 0;
  std::vector<std::string> names = uses_xyz ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"z1", "z2"};
  if (third) names.push_back(uses_xyz ? "z" : "z3");
  for (const auto& extra : options.parameters) names.push_back(extra);
  return build(p, make_variables(std::move(names)), parser.positions_);
}

long parse_field(std::string_view text) {
  if (text == "Q") return 0;
  if (text.size() < 4 || text.substr(0, 2) != "Q(" || text.back() != ')') {
    throw ParseError("field must be Q or Q(d)", 0);
  }
  std::string inner(text.substr(2, text.size() - 3));
  std::string digits = !inner.empty() && inner[0] == '-' ? inner.substr(1) : inner;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      digits.size() > 9) {
    throw ParseError("field radicand must be an integer", 2);
  }
  long d = std::stol(inner);
  if (d == 0 || d == 1) throw ParseError("field radicand must not be 0 or 1", 2);
  auto [free_part, cofactor] = square_free_decompose(mpz_class(d < 0 ? -d : d));
  if (cofactor != 1) throw ParseError("field radicand must be square-free", 2);
  return d;
}

}  // namespace germlab
