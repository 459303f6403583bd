#pragma once

#include <string>
#include <string_view>

#include "clifun/multivector.hpp"

namespace clifun {

// expr := term (('+'|'-') term)*, term := number? ('*'? blade)?,
// blade := 'e' digits (n <= 9) | 'e[' int (',' int)* ']'.
// A lowercase 'e' after a number starts a blade ("5e12" is 5 e12); exponents
// use 'E' or an explicitly signed 'e' ("2.5E3", "1e-7").
// Throws ParseError with the offending offset.
MV parse_multivector(const Signature& sig, std::string_view text);

// Terms in grade-lex order with `digits` significant digits, e.g.
// "8 - 6*e2 + 5*e12". Zero prints as "0".
std::string format_multivector(const MV& A, int digits = 6);

// Shortest form of x that reads back to the same double when digits == 17.
std::string format_number(double x, int digits);

}  // namespace clifun
