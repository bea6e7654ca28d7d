#pragma once

#include <string_view>
#include <vector>

#include "ccc/polynomial.hpp"

namespace ccc {

// Parses one polynomial. Accepted syntax:
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := nat ('/' nat)? | var | '(' poly ')'
//   var    := letter (letter | digit | '_')*
//
// Whitespace is insignificant. Integer literals are reduced mod p; a
// rational literal whose denominator is divisible by p is rejected.
// Errors are reported as ParseError with a 1-based line and column.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Parses a comma separated generator list, optionally wrapped as
// "ideal(...)". Zero generators are kept; "0" alone yields {0}.
std::vector<Polynomial> parse_generators(std::string_view text, const RingPtr& ring);

}  // namespace ccc
