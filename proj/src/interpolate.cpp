#include "dlinv/interpolate.hpp"

#include <algorithm>

#include "dlinv/errors.hpp"

namespace dlinv {

MPoly lagrange_interpolate(const std::vector<InterpolationPoint>& points, std::string_view var) {
    if (points.empty()) {
        throw InputError("interpolation needs at least one point");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].node == points[j].node) {
                throw InputError("duplicate interpolation node " + points[i].node.to_string());
            }
        }
    }
    const Var v = Var::named(var);
    const MPoly x(v);

    // Newton divided differences keep the work quadratic in the point count.
    std::vector<MPoly> coef;
    coef.reserve(points.size());
    for (const auto& p : points) {
        coef.push_back(p.value);
    }
    for (std::size_t level = 1; level < points.size(); ++level) {
        for (std::size_t i = points.size() - 1; i >= level; --i) {
            const Rational span = points[i].node - points[i - level].node;
            coef[i] = (coef[i] - coef[i - 1]) * span.reciprocal();
        }
    }
    MPoly result = coef.back();
    for (std::size_t i = points.size() - 1; i-- > 0;) {
        result = result * (x - MPoly(points[i].node)) + coef[i];
    }
    return result.with_universe({v});
}

Rational binomial_poly(const Rational& arg, unsigned m) {
    Rational acc(1);
    for (unsigned i = 0; i < m; ++i) {
        acc *= arg - Rational(static_cast<long>(i));
    }
    return acc / factorial(m);
}

MPoly binomial_poly(const MPoly& arg, unsigned m) {
    MPoly acc(1);
    for (unsigned i = 0; i < m; ++i) {
        acc *= arg - MPoly(static_cast<long>(i));
    }
    acc *= factorial(m).reciprocal();
    return acc.with_universe(arg.universe());
}

} // namespace dlinv
