#include "cgv/parser.hpp"

#include <cctype>
#include <optional>

namespace cgv {

ParseError::ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + message),
      kind_(kind),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly out = expr();
    skip_space();
    if (pos_ != text_.size()) fail({"+", "-", "*", "^", "end of input"}, "unexpected character");
    return out;
  }

 private:
  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MPoly factor() {
    if (accept('-')) return -factor();
    MPoly b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const auto digits = read_digits();
      if (digits.empty()) fail({"non-negative integer"}, "exponent must be a non-negative integer");
      if (digits.size() > 6 || std::stoul(std::string(digits)) > kMaxExponent) {
        throw ParseError(ParseError::Kind::syntax, at, {"exponent <= 4096"}, "exponent too large");
      }
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return b;
  }

  MPoly base() {
    skip_space();
    if (pos_ >= text_.size()) fail(expected_base(), "unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail({")", "+", "-", "*", "^"}, "unbalanced parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
      const auto num = read_digits();
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const auto den = read_digits();
        if (den.empty()) fail({"integer"}, "denominator must be an integer literal");
        const mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError(ParseError::Kind::syntax, at, {"nonzero integer"}, "zero denominator");
        return MPoly(NFElem(BigRational(mpz_class(std::string(num), 10), d)));
      }
      return MPoly(NFElem(BigRational(mpz_class(std::string(num), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) != 0 || ch == '_') {
      const std::size_t at = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(at, pos_ - at);
      if (name == "r") return MPoly(NFElem::generator());
      if (const auto v = var_from_name(name)) return MPoly::variable(*v);
      throw ParseError(ParseError::Kind::unknown_identifier, at, expected_base(),
                       "unknown identifier '" + std::string(name) + "'");
    }
    fail(expected_base(), std::string("unexpected character '") + ch + "'");
  }

  static std::vector<std::string> expected_base() {
    return {"(", "-", "integer", "X", "Y", "Z", "T", "r", "m", "A", "B"};
  }

  std::string_view read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& message) const {
    throw ParseError(ParseError::Kind::syntax, pos_, std::move(expected), message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace cgv
