#ifndef SYMCRIT_EXPR_HPP
#define SYMCRIT_EXPR_HPP

#include <string_view>

#include "symcrit/cyclotomic.hpp"

namespace symcrit {

/// Parses an exact cyclotomic expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | 'z' integer | '(' expr ')'
///
/// `zN` is the root of unity exp(2 pi i / N), so "z5^2" and "(1+z4)/2" are
/// valid. Decimal points are rejected. Throws ParseError on malformed input
/// and DivisionByZero on division by zero.
CycNum parse_cyc(std::string_view text);

}  // namespace symcrit

#endif  // SYMCRIT_EXPR_HPP
