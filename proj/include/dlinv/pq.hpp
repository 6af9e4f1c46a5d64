#pragma once

#include <memory>
#include <vector>

#include "dlinv/check.hpp"
#include "dlinv/mpoly.hpp"
#include "dlinv/rational.hpp"

namespace dlinv {

/// Source series s(x) = 1 + s_1 x + ... + s_N x^N together with lazily built
/// P_n(x) = trunc_n(P_{n-1}(x) s(x)) and Q_n(x) = x^n P_n(1/x).
///
/// Copies share the memo; it is guarded by a mutex, so a context may be read
/// from several threads.
class PQContext {
public:
    /// s_j = indeterminate sj for 1 <= j <= order.
    static PQContext symbolic(unsigned order);
    /// s given by its coefficients (s[0] must be 1); entries beyond the list are zero.
    static PQContext numeric(const std::vector<Rational>& s, unsigned order);

    unsigned order() const noexcept { return order_; }
    bool is_symbolic() const noexcept { return symbolic_; }
    /// s_0..s_N as constants or indeterminates.
    const std::vector<MPoly>& source() const noexcept { return s_; }
    /// Indeterminates every P_n, Q_n is declared over (x and any s_j).
    const std::vector<Var>& universe() const noexcept { return universe_; }

    /// Coefficients of P_n in x, lowest first (n+1 entries).
    std::vector<MPoly> p_coefficients(unsigned n) const;

private:
    PQContext(std::vector<MPoly> s, unsigned order, bool symbolic);

    struct Memo;
    std::vector<MPoly> s_;
    unsigned order_ = 0;
    bool symbolic_ = false;
    std::vector<Var> universe_;
    std::shared_ptr<Memo> memo_;
};

/// P_n(x). Throws PrecisionError for n > order.
MPoly p_sequence(const PQContext& ctx, unsigned n);
/// Q_n(x) = x^n P_n(1/x).
MPoly q_sequence(const PQContext& ctx, unsigned n);

/// Partition closed form for P_n in terms of the context's s_j.
MPoly formuleP_closed(const PQContext& ctx, unsigned n);

/// sum Q_n(x) t^n * (1 - t x sum Q_n(0) t^n) == sum Q_n(0) t^n mod t^(N+1).
CheckResult verify_thmA(const PQContext& ctx, unsigned order);

/// I^x applied to (Q_n(0)), then x -> -x, reproduces (Q_n(x)).
CheckResult qx_invert_link(const PQContext& ctx, unsigned order);

} // namespace dlinv
