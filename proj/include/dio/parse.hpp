#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dio/types.hpp"

namespace dio {

struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the input
  ParseError(const std::string& what, std::size_t pos);
};

// Parsed form of one equation string; absent variables have coefficient 0.
struct ParsedEquation {
  Int x = 0, y = 0, z = 0;
  Int rhs = 0;

  Equation3 equation() const { return {x, y, z, rhs}; }
};

// Grammar: signed terms `[k][*]v` with v in {x, y, z} (implicit k = 1),
// joined by + or -, then `=` and a signed decimal integer. Whitespace is
// ignored; repeated variables sum their coefficients; the Unicode minus sign
// is accepted as `-`.
ParsedEquation parse_equation(std::string_view text);

// Canonical printer; parse_equation(format_equation(e)) is equivalent to e.
std::string format_equation(const ParsedEquation& eq);

}  // namespace dio
