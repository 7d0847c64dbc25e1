// Integer polynomial products through a single big-integer multiplication.
#pragma once

#include "eisprod/rational.hpp"

#include <cstddef>
#include <vector>

namespace eisprod {

using IntPoly = std::vector<Integer>;

std::size_t max_bits(const IntPoly& a);

// Full product of two integer polynomials (coefficient lists, low degree first).
IntPoly kronecker_multiply(const IntPoly& a, const IntPoly& b);

// Schoolbook product that skips zero coefficients.
IntPoly schoolbook_multiply(const IntPoly& a, const IntPoly& b);

// Picks one of the two by a size heuristic.
IntPoly poly_multiply(const IntPoly& a, const IntPoly& b);

// Product of two series whose coefficients are polynomials of degree < width,
// truncated to `terms` output coefficients. Each output polynomial has 2*width-1 entries.
std::vector<IntPoly> series_poly_multiply(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b,
                                          std::size_t width, std::size_t terms);

} // namespace eisprod
