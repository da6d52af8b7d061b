#ifndef LOGRES_PARSER_HPP
#define LOGRES_PARSER_HPP

#include "logres/polynomial.hpp"

namespace logres {

// Parse a polynomial in the problem grammar: integer or integer/integer
// literals, the parameter symbol, variable names, + - * / ^ and parentheses.
// Multiplication is always explicit, ^ takes positive integer exponents and
// / accepts constant (coefficient-field) divisors only. Whitespace is
// insignificant. Errors carry the offending position.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace logres

#endif
