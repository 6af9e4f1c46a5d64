#pragma once

// Test-only reference implementations. Each is deliberately naive and shares
// no code path with the library routine it checks.

#include <cstddef>
#include <functional>
#include <vector>

#include "dlinv/matrix.hpp"

namespace oracle {

/// Laplace expansion along the first row.
template <class R>
R cofactor_det(const dlinv::SquareMatrix<R>& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return R(1);
    }
    if (n == 1) {
        return m(0, 0);
    }
    R total(0);
    for (std::size_t col = 0; col < n; ++col) {
        dlinv::SquareMatrix<R> minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) {
                    minor(i - 1, jj++) = m(i, j);
                }
            }
        }
        const R term = m(0, col) * cofactor_det(minor);
        total = (col % 2 == 0) ? R(total + term) : R(total - term);
    }
    return total;
}

/// Counts solutions of sum_j j*nu_j = m by scanning every bounded multiplicity vector.
inline std::size_t partition_count_bruteforce(unsigned m) {
    if (m == 0) {
        return 1;
    }
    std::vector<unsigned> nu(m, 0);
    std::size_t count = 0;
    std::function<void(unsigned, unsigned)> scan = [&](unsigned j, unsigned acc) {
        if (j > m) {
            count += (acc == m) ? 1 : 0;
            return;
        }
        for (unsigned c = 0; c <= m / j; ++c) {
            scan(j + 1, acc + c * j);
        }
    };
    scan(1, 0);
    return count;
}

/// Schoolbook product of two coefficient lists, truncated to `order`.
template <class R>
std::vector<R> naive_product(const std::vector<R>& f, const std::vector<R>& g, std::size_t order) {
    std::vector<R> out(order + 1, R(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i + j <= order) {
                out[i + j] = out[i + j] + f[i] * g[j];
            }
        }
    }
    return out;
}

} // namespace oracle
