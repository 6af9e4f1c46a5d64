#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dlinv/check.hpp"
#include "dlinv/matrix.hpp"
#include "dlinv/series.hpp"

namespace dlinv {

/// A finite prefix a_0..a_N of a sequence. Numeric sequences use Rational,
/// symbolic ones MPoly; the element type keeps the two modes apart.
template <CoefficientRing R>
using Sequence = std::vector<R>;

/// Entries are polynomials in an interpolation variable (x by default).
using PolySequence = std::vector<MPoly>;

/// Comma-separated rationals, e.g. `1,2,5/3`. Throws InputError.
Sequence<Rational> parse_sequence(std::string_view text);
/// Indeterminates stem0..stemN.
Sequence<MPoly> symbolic_sequence(std::string_view stem, unsigned order);

template <CoefficientRing R>
TruncatedSeries<R> generating_series(const Sequence<R>& a, const std::string& var = "t") {
    return TruncatedSeries<R>(var, a);
}

/// b = I(a), read off (1 + t A(t)) (1 - t B(t)) = 1.
template <CoefficientRing R>
Sequence<R> invert_transform(const Sequence<R>& a) {
    if (a.empty()) {
        throw InputError("empty sequence");
    }
    std::vector<R> c(a.size() + 1, R(0));
    c[0] = R(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i + 1] = a[i];
    }
    const auto inv = series_inverse(TruncatedSeries<R>("t", std::move(c)));
    Sequence<R> b;
    b.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        b.push_back(-inv.coeffs()[n + 1]);
    }
    return b;
}

/// a = I^{-1}(b), from 1 + t A(t) = 1 / (1 - t B(t)).
template <CoefficientRing R>
Sequence<R> invert_inverse(const Sequence<R>& b) {
    if (b.empty()) {
        throw InputError("empty sequence");
    }
    std::vector<R> c(b.size() + 1, R(0));
    c[0] = R(1);
    for (std::size_t i = 0; i < b.size(); ++i) {
        c[i + 1] = -b[i];
    }
    const auto inv = series_inverse(TruncatedSeries<R>("t", std::move(c)));
    return Sequence<R>(inv.coeffs().begin() + 1, inv.coeffs().end());
}

/// I^k(a) for any integer k via the closed form A(t) / (1 + k t A(t)).
template <CoefficientRing R>
Sequence<R> iterate_invert(const Sequence<R>& a, long k) {
    if (a.empty()) {
        throw InputError("empty sequence");
    }
    const auto series = generating_series(a);
    const auto denom = TruncatedSeries<R>::one("t", series.order()) + shift_up(scale(series, R(k)), 1);
    return (series * series_inverse(denom)).coeffs();
}

/// I^x(a): entry n is the polynomial I_n(x) with I^k(a) = I^x(a) at x = k.
PolySequence continuous_invert(const Sequence<MPoly>& a, std::string_view var = "x");
PolySequence continuous_invert(const Sequence<Rational>& a, std::string_view var = "x");

/// Partition closed form for I_n(x) under a_0 = 1, in x and a1..an.
MPoly formuleI_closed(unsigned n);

/// I^x(I^y(a)) = I^{x+y}(a) symbolically in x, y, a_0..a_N.
CheckResult group_law_check(unsigned order);

/// Determinant of the (n+1)x(n+1) lower Hessenberg Toeplitz matrix
/// (b_{i-j}) with b_{-1} = -1 and b_{-k} = 0 for k >= 2; recovers a_n from b = I(a).
template <CoefficientRing R>
R toeplitz_recover(const Sequence<R>& b, std::size_t n) {
    if (b.size() < n + 1) {
        throw InputError("toeplitz recovery of index " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                         " entries, got " + std::to_string(b.size()));
    }
    SquareMatrix<R> m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (i >= j) {
                m(i, j) = b[i - j];
            } else if (j == i + 1) {
                m(i, j) = R(-1);
            }
        }
    }
    return det(std::move(m));
}

/// I_n(x; lam*a) = lam * I_n(lam*x; a) symbolically, general a_0.
CheckResult homogeneity_check(unsigned n);

} // namespace dlinv
