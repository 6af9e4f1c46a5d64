#pragma once

#include <string>
#include <vector>

#include "dlinv/check.hpp"
#include "dlinv/invert.hpp"
#include "dlinv/matrix.hpp"
#include "dlinv/pq.hpp"

namespace dlinv {

/// H_k(n): the n x n matrix (s_{i+j+k}). Needs indices up to 2(n-1)+k.
template <CoefficientRing R>
SquareMatrix<R> hankel_matrix(const std::vector<R>& s, std::size_t n, std::size_t k = 0) {
    if (n > 0 && s.size() < 2 * (n - 1) + k + 1) {
        throw InputError("Hankel matrix of size " + std::to_string(n) + " at shift " + std::to_string(k) + " needs " +
                         std::to_string(2 * (n - 1) + k + 1) + " entries, got " + std::to_string(s.size()));
    }
    SquareMatrix<R> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = s[i + j + k];
        }
    }
    return m;
}

/// [det H_k(1), ..., det H_k(count)].
template <CoefficientRing R>
std::vector<R> hankel_transform(const std::vector<R>& s, std::size_t count, std::size_t k = 0) {
    if (count > 0) {
        hankel_matrix(s, count, k); // length check before any work
    }
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        out.push_back(det(hankel_matrix(s, n, k)));
    }
    return out;
}

/// Hankel transforms of a and I(a) agree on sizes 1..count.
template <CoefficientRing R>
CheckResult layman_check(const Sequence<R>& a, std::size_t count) {
    const auto lhs = hankel_transform(a, count);
    const auto rhs = hankel_transform(invert_transform(a), count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!(lhs[i] == rhs[i])) {
            return CheckResult::fail("size " + std::to_string(i + 1) + ": det H(a) = " + lhs[i].to_string() +
                                     ", det H(I(a)) = " + rhs[i].to_string());
        }
    }
    return CheckResult::pass();
}

/// Size limits for determinant reports; the environment variables
/// DLINV_SYMBOLIC_NMAX and DLINV_NUMERIC_NMAX override the defaults.
struct SizeBudget {
    unsigned symbolic_nmax = 5;
    unsigned numeric_nmax = 8;

    static SizeBudget from_env();
    /// Throws ResourceError when n exceeds the relevant cap.
    void require(unsigned n, bool symbolic) const;
};

struct HankelRow {
    unsigned n = 0;
    MPoly det;
    int degree = -1; ///< degree in the measured variable, -1 for a zero determinant
    bool ok = true;  ///< within the conjectured bound
};

struct HankelReport {
    std::string kind;          ///< "conjecture-i" or "conjecture-ii"
    unsigned shift = 0;        ///< Hankel shift k
    std::string measured_var;  ///< "x" for (i), "s1" for (ii)
    int bound = 0;             ///< allowed degree in measured_var
    std::vector<HankelRow> rows;
};

/// det((I_{i+j}(x))) for n = 1..count must be free of x.
CheckResult continuous_layman_check(const Sequence<MPoly>& a, std::size_t count);
CheckResult continuous_layman_check(const Sequence<Rational>& a, std::size_t count);

/// Degrees in x of det((I_{i+j+k}(x))_{i,j<n}) for k = 0..kmax, n = 1..nmax.
std::vector<HankelReport> conjecture_i_report(const Sequence<MPoly>& a, unsigned kmax, unsigned nmax,
                                              const SizeBudget& budget = {});
std::vector<HankelReport> conjecture_i_report(const Sequence<Rational>& a, unsigned kmax, unsigned nmax,
                                              const SizeBudget& budget = {});

/// Occurrence of s1 in det((Q_{i+j}(x))_{i,j<n}) for n = 1..nmax.
HankelReport conjecture_ii_report(const PQContext& ctx, unsigned nmax, const SizeBudget& budget = {});

} // namespace dlinv
