#pragma once

// Small expression grammar over sin, cos, exp, complex constants and
// + - * /, normalized to quotients of exponential sums.
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('+'|'-')* primary
//   primary := number | 'i' | 'z' | name | fn '(' expr ')' | '(' expr ')'
//
// Named constants: pi, sqrt2, sqrt3, sqrt5, e. Functions: sin, cos, exp,
// sqrt (of a nonnegative real constant). The variable z may appear only
// in linear forms inside sin/cos/exp; sin/cos need a real z-coefficient,
// exp a purely imaginary one.

#include <string>

#include "mapstrip/core.hpp"

namespace mapstrip {

/// Parse an expression to a quotient of exponential sums on `domain`.
/// Throws ParseError.
MeromorphicAP parse_function(const std::string& expr, const Strip& domain);

/// Parse an expression that must reduce to an entire exponential sum
/// (denominator constant). Throws ParseError.
ExponentialSum parse_exponential_sum(const std::string& expr);

}  // namespace mapstrip
