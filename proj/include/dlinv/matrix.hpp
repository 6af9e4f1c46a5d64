#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dlinv/errors.hpp"
#include "dlinv/ring.hpp"

namespace dlinv {

/// Dense square matrix over a coefficient ring, row-major.
template <CoefficientRing R>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, R(0)) {}

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = R(1);
        }
        return m;
    }

    /// Builds from nested rows; every row must have the same length as the row count.
    static SquareMatrix from_rows(const std::vector<std::vector<R>>& rows) {
        SquareMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw InputError("matrix is not square");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    template <class F>
    auto map(F&& f) const {
        using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
        SquareMatrix<Out> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                out(i, j) = f((*this)(i, j));
            }
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<R> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting on
/// zero pivots. Every division is exact over an integral domain; a remainder
/// raises InvariantError. The empty matrix has determinant 1.
template <CoefficientRing R>
R det(SquareMatrix<R> m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return R(1);
    }
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) {
                ++p;
            }
            if (p == n) {
                return R(0);
            }
            for (std::size_t j = k; j < n; ++j) {
                std::swap(m(k, j), m(p, j));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = divide_exact(num, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R out = m(n - 1, n - 1);
    return negate ? R(-out) : out;
}

} // namespace dlinv
