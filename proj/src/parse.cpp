#include "germ/parse.hpp"

#include <cctype>

#include "germ/errors.hpp"

namespace germ {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      if (negate) {
        acc -= t;
      } else {
        acc += t;
      }
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) { return is_digit(c) || is_ident_start(c) || c == '('; }

  Polynomial term() {
    bool last_numeral = false;
    Polynomial acc = factor(last_numeral);
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        bool numeral = false;
        acc *= factor(numeral);
        last_numeral = numeral;
      } else if (starts_factor(c)) {
        if (last_numeral && is_digit(c)) fail("implicit multiplication of two numerals");
        bool numeral = false;
        acc *= factor(numeral);
        last_numeral = numeral;
      } else {
        return acc;
      }
    }
  }

  // `numeral` reports whether the factor was a bare number literal.
  Polynomial factor(bool& numeral) {
    char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      Polynomial inner = factor(numeral);
      numeral = false;
      return c == '-' ? -inner : inner;
    }
    Polynomial base = atom(numeral);
    if (peek() == '^') {
      ++pos_;
      char e = peek();
      if (e == '-') fail("negative exponent");
      if (!is_digit(e)) fail("exponent must be a nonnegative integer literal");
      const std::size_t at = pos_;
      std::string exp = digits();
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) fail("exponent must be an integer");
      if (exp.size() > 6) {
        pos_ = at;
        fail("exponent too large");
      }
      base = pow(base, static_cast<unsigned>(std::stoul(exp)));
      numeral = false;
    }
    return base;
  }

  Polynomial atom(bool& numeral) {
    char c = peek();
    numeral = false;
    if (is_digit(c)) {
      Integer num(digits());
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported; use a fraction");
      if (peek() == '/') {
        ++pos_;
        if (!is_digit(peek())) fail("expected an integer denominator");
        const std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) {
          pos_ = at;
          fail("division by zero");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      numeral = true;
      return Polynomial::constant(ring_, q);
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const std::size_t idx = ring_->index_of(name);
      if (idx == ring_->nvars()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace germ
