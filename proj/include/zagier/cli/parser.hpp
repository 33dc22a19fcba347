#pragma once

#include <complex>
#include <string_view>

#include "zagier/hyperlog/iterm.hpp"

namespace zagier {

// Expression mini-grammar shared by the command line and the tests:
//
//   iterm  := "I(" point ";" [ point { "," point } ] ";" point ")"
//   point  := "inf" | expr
//   expr   := term { ("+" | "-") term }
//   term   := unary { ("*" | "/") unary }
//   unary  := [ "-" ] atom
//   atom   := IDENT | INTEGER | "cr(" point "," point "," point "," point ")" | "(" expr ")"
//
// Rationals are written as quotients, e.g. 1/x or -3/7. ParseError carries
// the offending position; arithmetic failures such as division by zero
// surface as DegenerateArgument.
PPoint parse_point(std::string_view text);
ITerm parse_iterm(std::string_view text);

// "0.3", "-1.5e-2", "0.3+0.2i", "2i", "i".
std::complex<double> parse_complex(std::string_view text);

}  // namespace zagier
