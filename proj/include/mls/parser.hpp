#ifndef MLS_PARSER_HPP
#define MLS_PARSER_HPP

#include <string>

#include "mls/ratexpr.hpp"

namespace mls {

// Parses the expression grammar: integer literals, chart symbols, + - * / ^
// (integer exponents), parentheses. Throws error(errkind::input) with a
// character position on syntax errors and unknown identifiers.
RationalExpr parse_expr(const std::string& text, const Chart& chart);

} // namespace mls

#endif
