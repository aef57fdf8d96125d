#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgv/mpoly.hpp"

namespace cgv {

/// Positioned parse failure. `offset` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_identifier };

  ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Parses a polynomial expression:
///
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := "-" factor | base ("^" nonneg-int)?
///   base   := ident | integer | integer "/" integer | "(" expr ")"
///   ident  := X | Y | Z | T | r | m | A | B
///
/// Whitespace is ignored and there is no implicit multiplication. Unary minus
/// binds looser than "^", so "-X^2" is -(X^2). `r` is reduced on the fly.
MPoly parse_poly(std::string_view text);

}  // namespace cgv
