#include "addchow/fields/parse.hpp"

#include <cctype>

#include "addchow/error.hpp"

namespace addchow {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const TowerPtr& tower, std::string_view text) : tower_(tower), text_(text) {}

  FieldElement parse() {
    FieldElement v = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Parse, "at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expression() {
    FieldElement v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  FieldElement term() {
    FieldElement v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        FieldElement d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail(ErrorKind::DivisionByZero, "at position " + std::to_string(at) + ": division by zero");
        }
        v = v / d;
      } else {
        return v;
      }
    }
  }

  FieldElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  FieldElement power() {
    FieldElement base = atom();
    if (accept('^')) {
      skip_space();
      bool negative = accept('-');
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected an integer exponent");
      long e = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (e > 10000) error("exponent too large");
      if (negative && base.is_zero()) fail(ErrorKind::DivisionByZero, "negative power of zero");
      return base.pow(static_cast<int>(negative ? -e : e));
    }
    return base;
  }

  FieldElement atom() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expression();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class z(std::string(text_.substr(start, pos_ - start)));
      return FieldElement::from_rational(tower_, mpq_class(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      bool known = tower_->index_of(name).has_value() ||
                   (tower_->has_extension() && tower_->extension_data().name == name);
      if (!known) {
        pos_ = start;
        error("unknown variable '" + name + "' for field " + tower_->to_string());
      }
      return FieldElement::variable(tower_, name);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const TowerPtr& tower_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string trim_copy(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    else if (c == ')' || c == ']' || c == '}') --depth;
    else if (c == sep && depth == 0) {
      out.push_back(trim_copy(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim_copy(text.substr(start)));
  return out;
}

FieldElement parse_element(const TowerPtr& tower, std::string_view text) {
  return ExpressionParser(tower, text).parse();
}

TowerPtr parse_tower(std::string_view text_in) {
  std::string text = trim_copy(text_in);
  auto error = [&](std::size_t at, const std::string& msg) -> void {
    fail(ErrorKind::Parse, "at position " + std::to_string(at) + " in field \"" + text + "\": " + msg);
  };
  std::size_t pos = 0;
  Characteristic p = 0;
  if (pos < text.size() && (text[pos] == 'Q' || text[pos] == 'q')) {
    ++pos;
  } else if (pos < text.size() && (text[pos] == 'F' || text[pos] == 'f')) {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) error(pos, "expected a prime after F");
    p = std::stoull(text.substr(start, pos - start));
    if (!is_prime(p)) error(start, std::to_string(p) + " is not prime");
  } else {
    error(pos, "expected Q or F<p>");
  }
  std::vector<std::string> vars;
  if (pos < text.size() && text[pos] == '(') {
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) error(pos, "unclosed variable list");
    for (auto& v : split_top_level(std::string_view(text).substr(pos + 1, close - pos - 1), ','))
      if (!v.empty()) vars.push_back(v);
    pos = close + 1;
  }
  TowerPtr base = FieldTower::function_field(p, vars);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == text.size()) return base;
  if (text[pos] != '[') error(pos, "expected '[' for an extension");
  std::size_t close = text.find(']', pos);
  if (close == std::string::npos) error(pos, "unclosed generator name");
  std::string name = trim_copy(std::string_view(text).substr(pos + 1, close - pos - 1));
  pos = close + 1;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != '/') error(pos, "expected '/' before the minimal polynomial");
  ++pos;
  std::string poly_text = trim_copy(std::string_view(text).substr(pos));
  // Read the minimal polynomial with the generator as an extra transcendental.
  std::vector<std::string> vars_ext = vars;
  vars_ext.push_back(name);
  TowerPtr scratch = FieldTower::function_field(p, vars_ext);
  FieldElement f = parse_element(scratch, poly_text);
  const RationalFunction& rf = f.base_value();
  const std::size_t th = vars.size();
  if (rf.denominator().degree_in(th) != 0) error(pos, "minimal polynomial must be polynomial in " + name);
  std::vector<RationalFunction> coeffs;
  for (const auto& c : rf.numerator().coefficients_in(th)) coeffs.push_back(RationalFunction::fraction(c, rf.denominator()));
  return FieldTower::extension(base, name, std::move(coeffs));
}

std::vector<FieldElement> parse_tuple(const TowerPtr& tower, std::string_view text_in) {
  std::string text = trim_copy(text_in);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    fail(ErrorKind::Parse, "expected a parenthesised tuple, got \"" + text + "\"");
  std::vector<FieldElement> out;
  for (auto& part : split_top_level(std::string_view(text).substr(1, text.size() - 2), ',')) {
    if (part.empty()) fail(ErrorKind::Parse, "empty tuple entry in \"" + text + "\"");
    out.push_back(parse_element(tower, part));
  }
  return out;
}

}  // namespace addchow
