#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "dlinv/mpoly.hpp"
#include "dlinv/rational.hpp"

namespace dlinv {

struct InterpolationPoint {
    Rational node;
    MPoly value;
};

/// Unique polynomial in `var` of degree < points.size() through every point.
/// Values may themselves be polynomials in other indeterminates.
/// Throws InputError on an empty point list or duplicate nodes.
MPoly lagrange_interpolate(const std::vector<InterpolationPoint>& points, std::string_view var = "x");

/// arg (arg-1) ... (arg-m+1) / m!; equals 1 for m = 0.
Rational binomial_poly(const Rational& arg, unsigned m);
MPoly binomial_poly(const MPoly& arg, unsigned m);

} // namespace dlinv
