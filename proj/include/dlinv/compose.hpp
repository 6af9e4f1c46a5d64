#pragma once

#include <string_view>
#include <vector>

#include "dlinv/check.hpp"
#include "dlinv/invert.hpp"
#include "dlinv/series.hpp"

namespace dlinv {

/// f(t) = t + a_2 t^2 + ... in t, tangent to the identity.
class IterableSeries {
public:
    /// Throws InputError unless c_0 = 0 and c_1 = 1.
    explicit IterableSeries(TruncatedSeries<MPoly> f);

    /// a_i = indeterminate ai for 2 <= i <= order.
    static IterableSeries symbolic(unsigned order);
    /// a_2, a_3, ... from `higher`; coefficients past the list are zero.
    static IterableSeries numeric(const std::vector<Rational>& higher, unsigned order);

    const TruncatedSeries<MPoly>& series() const noexcept { return f_; }
    std::size_t order() const noexcept { return f_.order(); }

private:
    TruncatedSeries<MPoly> f_;
};

/// f composed with itself k times; k = 0 gives the identity series.
TruncatedSeries<MPoly> compose_iterate_integer(const IterableSeries& f, unsigned k);

/// C_0..C_N in `var` (C_0 = 0), where C_n interpolates [t^n] f^{ok} at k = 0..n-1.
PolySequence c_polynomials(const IterableSeries& f, unsigned order, std::string_view var = "x");

/// C_n(k+1) - C_n(k) = [t^n] sum_{i>=2} a_i (sum_j C_j(k) t^j)^i in an indeterminate k.
CheckResult c_difference_check(const IterableSeries& f, unsigned order);

/// C_n(k) = [t^n] f^{ok} for every integer 0 <= k <= order, including nodes
/// outside the interpolation set.
CheckResult c_extrapolation_check(const IterableSeries& f, unsigned order);

/// sum C_i(x) (sum C_j(y) t^j)^i = sum C_i(x+y) t^i mod t^(N+1).
CheckResult compose_group_law_check(const IterableSeries& f, unsigned order);

} // namespace dlinv
