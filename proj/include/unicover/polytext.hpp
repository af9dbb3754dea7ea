#pragma once

#include <string>
#include <string_view>

#include "unicover/poly.hpp"

namespace unicover {

/// Parses integers, rationals `p/q`, identifiers, `+ - * ^` and parentheses.
/// Precedence: `^` > unary `-` > `*` > binary `+ -`. Exponents are
/// non-negative integer literals. `line_offset`/`column_offset` shift the
/// reported error position when the text is a fragment of a larger file.
Poly parse_poly(std::string_view text, const VarTablePtr& vars, int line_offset = 0, int column_offset = 0);

/// Canonical rendering; parse_poly(render_poly(f)) == f.
std::string render_poly(const Poly& f);

std::string render_rational(const Rational& q);

}  // namespace unicover
