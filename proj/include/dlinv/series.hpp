#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dlinv/errors.hpp"
#include "dlinv/ring.hpp"

namespace dlinv {

/// Formal power series in one named variable known exactly modulo
/// var^(order+1). Coefficients are stored densely, c_0 ... c_order.
template <CoefficientRing R>
class TruncatedSeries {
public:
    TruncatedSeries(std::string var, std::vector<R> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw InputError("a truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries constant(std::string var, const R& c, std::size_t order) {
        std::vector<R> v(order + 1, R(0));
        v[0] = c;
        return TruncatedSeries(std::move(var), std::move(v));
    }
    static TruncatedSeries one(std::string var, std::size_t order) { return constant(std::move(var), R(1), order); }
    /// The series `var` itself (order >= 1 keeps it non-trivial).
    static TruncatedSeries identity(std::string var, std::size_t order) {
        std::vector<R> v(order + 1, R(0));
        if (order >= 1) {
            v[1] = R(1);
        }
        return TruncatedSeries(std::move(var), std::move(v));
    }

    const std::string& var() const noexcept { return var_; }
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    const R& operator[](std::size_t i) const {
        if (i > order()) {
            throw PrecisionError("coefficient " + std::to_string(i) + " beyond order " + std::to_string(order()));
        }
        return coeffs_[i];
    }

    /// Textual form `c0 + c1*t + ... + O(t^K)`.
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) {
                continue;
            }
            std::string c = coeffs_[i].to_string();
            std::string piece;
            if (i == 0) {
                piece = c;
            } else {
                const bool compound = c.find_first_of("+ ", 1) != std::string::npos;
                if (c == "1") {
                    piece = power(i);
                } else if (c == "-1") {
                    piece = "-" + power(i);
                } else {
                    piece = (compound ? "(" + c + ")" : c) + "*" + power(i);
                }
            }
            if (!out.empty()) {
                if (piece.front() == '-') {
                    out += " - ";
                    piece.erase(0, 1);
                } else {
                    out += " + ";
                }
            }
            out += piece;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += "O(" + power(order() + 1) + ")";
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::string power(std::size_t i) const { return i == 1 ? var_ : var_ + "^" + std::to_string(i); }

    std::string var_;
    std::vector<R> coeffs_;
};

/// First k+1 coefficients. k beyond the stored order is a PrecisionError.
template <CoefficientRing R>
TruncatedSeries<R> truncate(const TruncatedSeries<R>& f, std::size_t k) {
    if (k > f.order()) {
        throw PrecisionError("cannot truncate order " + std::to_string(f.order()) + " series to order " + std::to_string(k));
    }
    return TruncatedSeries<R>(f.var(), std::vector<R>(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(k) + 1));
}

namespace detail {

template <CoefficientRing R>
void require_same_var(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    if (f.var() != g.var()) {
        throw InputError("series variables differ: " + f.var() + " vs " + g.var());
    }
}

} // namespace detail

template <CoefficientRing R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    detail::require_same_var(f, g);
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<R> out(n + 1, R(0));
    for (std::size_t i = 0; i <= n; ++i) {
        out[i] = f.coeffs()[i] + g.coeffs()[i];
    }
    return TruncatedSeries<R>(f.var(), std::move(out));
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    detail::require_same_var(f, g);
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<R> out(n + 1, R(0));
    for (std::size_t i = 0; i <= n; ++i) {
        out[i] = f.coeffs()[i] - g.coeffs()[i];
    }
    return TruncatedSeries<R>(f.var(), std::move(out));
}

template <CoefficientRing R>
TruncatedSeries<R> scale(const TruncatedSeries<R>& f, const R& c) {
    std::vector<R> out;
    out.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) {
        out.push_back(a * c);
    }
    return TruncatedSeries<R>(f.var(), std::move(out));
}

/// Multiplies by var^k, keeping the order (top k coefficients fall off).
template <CoefficientRing R>
TruncatedSeries<R> shift_up(const TruncatedSeries<R>& f, std::size_t k) {
    std::vector<R> out(f.order() + 1, R(0));
    for (std::size_t i = k; i <= f.order(); ++i) {
        out[i] = f.coeffs()[i - k];
    }
    return TruncatedSeries<R>(f.var(), std::move(out));
}

/// Cauchy product at order min(order f, order g).
template <CoefficientRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    detail::require_same_var(f, g);
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<R> out(n + 1, R(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f.coeffs()[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!g.coeffs()[j].is_zero()) {
                out[i + j] = out[i + j] + f.coeffs()[i] * g.coeffs()[j];
            }
        }
    }
    return TruncatedSeries<R>(f.var(), std::move(out));
}

template <CoefficientRing R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    return series_mul(f, g);
}

/// Multiplicative inverse; c_0 must be a unit of the coefficient ring.
template <CoefficientRing R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& f) {
    const auto& c = f.coeffs();
    R inv0(0);
    try {
        inv0 = unit_inverse(c[0]);
    } catch (const NotInvertibleError&) {
        throw NotInvertibleError("series constant term " + c[0].to_string() + " is not a unit");
    }
    std::vector<R> g(c.size(), R(0));
    g[0] = inv0;
    for (std::size_t n = 1; n < c.size(); ++n) {
        R acc(0);
        for (std::size_t i = 1; i <= n; ++i) {
            if (!c[i].is_zero() && !g[n - i].is_zero()) {
                acc = acc + c[i] * g[n - i];
            }
        }
        g[n] = -(acc * inv0);
    }
    return TruncatedSeries<R>(f.var(), std::move(g));
}

/// f(g(var)) by Horner's scheme in the truncated ring; g(0) must vanish.
template <CoefficientRing R>
TruncatedSeries<R> series_compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
    detail::require_same_var(f, g);
    if (!g.coeffs()[0].is_zero()) {
        throw CompositionDomainError("inner series has nonzero constant term " + g.coeffs()[0].to_string());
    }
    const std::size_t n = std::min(f.order(), g.order());
    const TruncatedSeries<R> inner = truncate(g, n);
    TruncatedSeries<R> acc = TruncatedSeries<R>::constant(f.var(), f.coeffs()[n], n);
    for (std::size_t i = n; i-- > 0;) {
        acc = series_mul(acc, inner);
        std::vector<R> c = acc.coeffs();
        c[0] = c[0] + f.coeffs()[i];
        acc = TruncatedSeries<R>(f.var(), std::move(c));
    }
    return acc;
}

/// f^e by repeated squaring; f^0 = 1.
template <CoefficientRing R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& f, unsigned e) {
    TruncatedSeries<R> result = TruncatedSeries<R>::one(f.var(), f.order());
    TruncatedSeries<R> base = f;
    while (e > 0) {
        if (e & 1u) {
            result = series_mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = series_mul(base, base);
        }
    }
    return result;
}

} // namespace dlinv
