#pragma once

#include <concepts>
#include <string>

#include "dlinv/errors.hpp"
#include "dlinv/mpoly.hpp"
#include "dlinv/rational.hpp"

namespace dlinv {

/// Coefficient rings accepted by the series and matrix engines.
template <class R>
concept CoefficientRing = requires(R a, const R& b) {
    { R(0) } -> std::same_as<R>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { b.to_string() } -> std::convertible_to<std::string>;
};

inline Rational divide_exact(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw InvariantError("exact division by zero");
    }
    return a / b;
}

inline MPoly divide_exact(const MPoly& a, const MPoly& b) {
    return exact_divide(a, b);
}

/// Multiplicative inverse of a unit; for polynomials only nonzero constants qualify.
inline Rational unit_inverse(const Rational& a) {
    if (a.is_zero()) {
        throw NotInvertibleError("zero is not a unit");
    }
    return a.reciprocal();
}

inline MPoly unit_inverse(const MPoly& a) {
    if (a.is_zero() || !a.is_constant()) {
        throw NotInvertibleError("polynomial " + a.to_string() + " is not a unit");
    }
    return MPoly(a.constant_term().reciprocal());
}

inline MPoly to_poly(const Rational& r) { return MPoly(r); }
inline const MPoly& to_poly(const MPoly& p) { return p; }

} // namespace dlinv
