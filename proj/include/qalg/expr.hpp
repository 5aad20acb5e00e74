#pragma once

#include <string>

#include "qalg/glelem.hpp"

namespace qalg {

/**
 * Parses the expression grammar over O_q(GL_N): generators x[i,j], the
 * symbols detq and q, integer and rational literals a/b, operators
 * + - * ^ and parentheses; whitespace-insensitive. Exponents are
 * integers; negative exponents are allowed only on detq and q.
 *
 * Errors: syntax_error (with the offending position in the message),
 * index_out_of_range for generator indices outside 1..n,
 * negative_power_of_generator for a negative exponent anywhere else.
 */
GLElem parse_expr(const std::string& text, int n);

}  // namespace qalg
