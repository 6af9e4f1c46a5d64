#include "dlinv/pq.hpp"

#include <algorithm>
#include <mutex>

#include "dlinv/errors.hpp"
#include "dlinv/invert.hpp"
#include "dlinv/partition.hpp"
#include "dlinv/series.hpp"

namespace dlinv {

struct PQContext::Memo {
    std::mutex mutex;
    std::vector<std::vector<MPoly>> p; // p[n] = coefficients of P_n
};

PQContext::PQContext(std::vector<MPoly> s, unsigned order, bool symbolic)
    : s_(std::move(s)), order_(order), symbolic_(symbolic), memo_(std::make_shared<Memo>()) {
    universe_.push_back(Var::named("x"));
    if (symbolic_) {
        for (unsigned j = 1; j <= order_; ++j) {
            universe_.push_back(Var::indexed("s", j));
        }
    }
    std::sort(universe_.begin(), universe_.end());
    memo_->p.push_back({MPoly(1).with_universe(universe_)});
}

PQContext PQContext::symbolic(unsigned order) {
    std::vector<MPoly> s{MPoly(1)};
    for (unsigned j = 1; j <= order; ++j) {
        s.emplace_back(Var::indexed("s", j));
    }
    return PQContext(std::move(s), order, true);
}

PQContext PQContext::numeric(const std::vector<Rational>& s, unsigned order) {
    if (s.empty() || !s[0].is_one()) {
        throw InputError("source series must have constant term 1");
    }
    std::vector<MPoly> coeffs;
    for (unsigned j = 0; j <= order; ++j) {
        coeffs.emplace_back(j < s.size() ? s[j] : Rational(0));
    }
    return PQContext(std::move(coeffs), order, false);
}

std::vector<MPoly> PQContext::p_coefficients(unsigned n) const {
    if (n > order_) {
        throw PrecisionError("P_" + std::to_string(n) + " requested from a context of order " + std::to_string(order_));
    }
    std::lock_guard lock(memo_->mutex);
    auto& p = memo_->p;
    while (p.size() <= n) {
        // trunc_k(P_{k-1} s): the product keeps degrees 0..k
        const std::size_t k = p.size();
        const std::vector<MPoly>& prev = p.back();
        std::vector<MPoly> next(k + 1, MPoly(0));
        for (std::size_t j = 0; j <= k; ++j) {
            MPoly acc(0);
            for (std::size_t i = 0; i < prev.size() && i <= j; ++i) {
                acc += prev[i] * s_[j - i];
            }
            next[j] = acc.with_universe(universe_);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

namespace {

MPoly assemble(const std::vector<MPoly>& coeffs, bool reversed, const std::vector<Var>& universe) {
    const MPoly x = MPoly::var("x");
    const std::size_t n = coeffs.size() - 1;
    MPoly out(0);
    for (std::size_t j = 0; j <= n; ++j) {
        out += coeffs[j] * x.pow(static_cast<unsigned>(reversed ? n - j : j));
    }
    return out.with_universe(universe);
}

} // namespace

MPoly p_sequence(const PQContext& ctx, unsigned n) {
    return assemble(ctx.p_coefficients(n), false, ctx.universe());
}

MPoly q_sequence(const PQContext& ctx, unsigned n) {
    return assemble(ctx.p_coefficients(n), true, ctx.universe());
}

MPoly formuleP_closed(const PQContext& ctx, unsigned n) {
    if (n > ctx.order()) {
        throw PrecisionError("closed form P_" + std::to_string(n) + " beyond context order " + std::to_string(ctx.order()));
    }
    const MPoly x = MPoly::var("x");
    const Rational nr(static_cast<long>(n));
    MPoly total(0);
    for (unsigned k = 0; k <= n; ++k) {
        MPoly coeff(0);
        for (const Partition& nu : partitions(k)) {
            // part_count <= k <= n, so the denominator is at least 1
            const Rational ratio = Rational(static_cast<long>(n + 1 - k), static_cast<long>(n + 1 - nu.part_count()));
            const Rational weight = ratio * multinomial_ext(nr, nu);
            if (!weight.is_zero()) {
                coeff += partition_power(ctx.source(), nu) * weight;
            }
        }
        total += coeff * x.pow(k);
    }
    return total.with_universe(ctx.universe());
}

CheckResult verify_thmA(const PQContext& ctx, unsigned order) {
    std::vector<MPoly> q;
    std::vector<MPoly> q0;
    for (unsigned n = 0; n <= order; ++n) {
        q.push_back(q_sequence(ctx, n));
        q0.push_back(q.back().substitute("x", MPoly(0)));
    }
    const MPoly x = MPoly::var("x");
    const TruncatedSeries<MPoly> lhs_series("t", q);
    const TruncatedSeries<MPoly> g("t", q0);
    const auto factor = TruncatedSeries<MPoly>::one("t", order) - shift_up(scale(g, x), 1);
    const auto lhs = series_mul(lhs_series, factor);
    for (unsigned k = 0; k <= order; ++k) {
        if (!(lhs.coeffs()[k] == g.coeffs()[k])) {
            return CheckResult::fail("t^" + std::to_string(k) + ": " + first_difference(lhs.coeffs()[k], g.coeffs()[k]));
        }
    }
    return CheckResult::pass();
}

CheckResult qx_invert_link(const PQContext& ctx, unsigned order) {
    std::vector<MPoly> q;
    std::vector<MPoly> q0;
    for (unsigned n = 0; n <= order; ++n) {
        q.push_back(q_sequence(ctx, n));
        q0.push_back(q.back().substitute("x", MPoly(0)));
    }
    const PolySequence interp = continuous_invert(q0, "x");
    PolySequence flipped;
    flipped.reserve(interp.size());
    for (const auto& p : interp) {
        flipped.push_back(p.substitute("x", -MPoly::var("x")));
    }
    return compare_entries(flipped, q, "I^x(Q(0)) at -x vs Q(x)");
}

} // namespace dlinv
