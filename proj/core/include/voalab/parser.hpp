#pragma once

#include <stdexcept>
#include <string>

#include "voalab/fock.hpp"

namespace voalab {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Grammar: sums, products (explicit '*', '/', '·' or juxtaposition) and integer powers of
//   rational literals, i, r2, r3, r6 (also √2, √3, √6), named vectors, |0>, |q b>,
//   operators h(n) and L(n) (applied to what follows), parentheses.
// Accepts the output of State::to_string and Scalar::to_string.
State parse_state_expr(const std::string& text);
Scalar parse_scalar_expr(const std::string& text);
Rational parse_rational(const std::string& text);

}  // namespace voalab
