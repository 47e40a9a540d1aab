#pragma once

#include <optional>
#include <vector>

#include "isohopf/poly.hpp"

namespace isohopf {

// q | p ? p / q : nullopt
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);
MultiPoly divide_or_throw(const MultiPoly& p, const MultiPoly& q);

// Monic under grevlex; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_gcd(const std::vector<MultiPoly>& ps);

// Coefficients of p as a polynomial in `var`, index = power.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var);

// Sylvester determinant; throws DegreeZeroInput if either input is free of `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var);

}  // namespace isohopf
