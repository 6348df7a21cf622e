#include "dio/parse.hpp"

#include <cctype>

namespace dio {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)),
      position(pos) {}

namespace {

constexpr std::string_view kUnicodeMinus = "\xe2\x88\x92";  // U+2212

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  // Consumes '+', '-' or the Unicode minus; 0 if neither is next.
  int take_sign() {
    skip_ws();
    if (pos < s.size() && s[pos] == '+') {
      ++pos;
      return 1;
    }
    if (pos < s.size() && s[pos] == '-') {
      ++pos;
      return -1;
    }
    if (s.substr(pos, 3) == kUnicodeMinus) {
      pos += 3;
      return -1;
    }
    return 0;
  }
  bool digit_next() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  Int take_number() {
    skip_ws();
    Int value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = checked_add(checked_mul(value, 10), s[pos] - '0');
      ++pos;
    }
    return value;
  }
};

}  // namespace

ParsedEquation parse_equation(std::string_view text) {
  Scanner sc{text};
  ParsedEquation out;

  bool first = true;
  while (true) {
    if (sc.peek() == '=') break;
    int sign = sc.take_sign();
    if (sign == 0) {
      if (!first)
        throw ParseError("expected '+', '-' or '='", sc.pos);
      sign = 1;
    }
    Int coeff = 1;
    if (sc.digit_next()) {
      coeff = sc.take_number();
      sc.skip_ws();
      if (sc.pos < sc.s.size() && sc.s[sc.pos] == '*') ++sc.pos;
    }
    sc.skip_ws();
    if (sc.pos >= sc.s.size())
      throw ParseError("expected a variable", sc.pos);
    char v = sc.s[sc.pos];
    Int* slot = v == 'x' ? &out.x : v == 'y' ? &out.y : v == 'z' ? &out.z : nullptr;
    if (!slot) {
      if (std::isalpha(static_cast<unsigned char>(v)))
        throw ParseError(std::string("unknown variable '") + v + "'", sc.pos);
      throw ParseError("expected a variable", sc.pos);
    }
    ++sc.pos;
    *slot = checked_add(*slot, sign < 0 ? checked_neg(coeff) : coeff);
    first = false;
  }
  if (first) throw ParseError("expected at least one term", sc.pos);

  ++sc.pos;  // '='
  int sign = sc.take_sign();
  if (!sc.digit_next())
    throw ParseError("expected an integer after '='", sc.pos);
  Int rhs = sc.take_number();
  out.rhs = sign < 0 ? checked_neg(rhs) : rhs;
  if (!sc.eof()) throw ParseError("trailing input", sc.pos);
  return out;
}

std::string format_equation(const ParsedEquation& eq) {
  std::string s;
  const char* names[3] = {"x", "y", "z"};
  Int coeffs[3] = {eq.x, eq.y, eq.z};
  for (int i = 0; i < 3; ++i) {
    Int k = coeffs[i];
    if (s.empty()) {
      if (k < 0) s += "-";
    } else {
      s += k < 0 ? " - " : " + ";
    }
    s += std::to_string(checked_abs(k));
    s += names[i];
  }
  s += " = ";
  s += std::to_string(eq.rhs);
  return s;
}

}  // namespace dio
