#pragma once

#include "verocohom/poly.hpp"

namespace verocohom {

/// Exact quotient p / q; throws DimensionMismatch when q does not divide p.
QPoly divide_exact(const QPoly& p, const QPoly& q);

bool divides(const QPoly& q, const QPoly& p);

/// Scale to integer coefficients with content 1 and positive leading
/// coefficient (leading = first monomial in deg-lex descending order).
QPoly normalize_primitive(const QPoly& p);

/// gcd over Q[x_0..x_n], primitive and sign-normalized. Recursive
/// content/primitive-part computation with a primitive PRS in one variable
/// at a time.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

QPoly poly_gcd(const std::vector<QPoly>& polys, std::size_t nvars, Side side);

} // namespace verocohom
