// SPDX-License-Identifier: Apache-2.0
//
// Text grammar for polynomials in x and y:
//
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" nat)?
//   base     := rational | "x" | "y" | "(" expr ")" | "-" factor
//   rational := int ("/" posint)?
//
// Multiplication is always explicit. A leading minus binds looser than "^",
// so "-x^2" is -(x^2).
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pfint/bipoly.hpp"

namespace pfint {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

BiPoly parse_bipoly(std::string_view src);

}  // namespace pfint
