#include "dlinv/hankel.hpp"

#include <cstdlib>

namespace dlinv {

namespace {

unsigned env_unsigned(const char* name, unsigned fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (*end != '\0') {
        throw InputError(std::string(name) + " must be a natural number, got '" + raw + "'");
    }
    return static_cast<unsigned>(v);
}

bool is_symbolic(const Sequence<MPoly>& a) {
    for (const auto& e : a) {
        if (!e.is_constant()) {
            return true;
        }
    }
    return false;
}

Sequence<MPoly> lift(const Sequence<Rational>& a) {
    return Sequence<MPoly>(a.begin(), a.end());
}

} // namespace

SizeBudget SizeBudget::from_env() {
    SizeBudget b;
    b.symbolic_nmax = env_unsigned("DLINV_SYMBOLIC_NMAX", b.symbolic_nmax);
    b.numeric_nmax = env_unsigned("DLINV_NUMERIC_NMAX", b.numeric_nmax);
    return b;
}

void SizeBudget::require(unsigned n, bool symbolic) const {
    const unsigned cap = symbolic ? symbolic_nmax : numeric_nmax;
    if (n > cap) {
        throw ResourceError("determinant size " + std::to_string(n) + " exceeds the " +
                            (symbolic ? "symbolic" : "numeric") + " budget of " + std::to_string(cap) +
                            "; lower nmax or raise " + (symbolic ? "DLINV_SYMBOLIC_NMAX" : "DLINV_NUMERIC_NMAX"));
    }
}

CheckResult continuous_layman_check(const Sequence<MPoly>& a, std::size_t count) {
    const PolySequence ix = continuous_invert(a, "x");
    const Var x = Var::named("x");
    std::string dets;
    for (std::size_t n = 1; n <= count; ++n) {
        const MPoly d = det(hankel_matrix(ix, n));
        if (d.degree(x) > 0) {
            return CheckResult::fail("size " + std::to_string(n) + ": determinant has degree " +
                                     std::to_string(d.degree(x)) + " in x: " + d.to_string());
        }
    }
    return CheckResult::pass();
}

CheckResult continuous_layman_check(const Sequence<Rational>& a, std::size_t count) {
    return continuous_layman_check(lift(a), count);
}

std::vector<HankelReport> conjecture_i_report(const Sequence<MPoly>& a, unsigned kmax, unsigned nmax,
                                              const SizeBudget& budget) {
    budget.require(nmax, is_symbolic(a));
    const std::size_t needed = nmax == 0 ? 0 : 2 * (nmax - 1) + kmax + 1;
    if (a.size() < needed) {
        throw InputError("conjecture (i) report needs " + std::to_string(needed) + " sequence entries, got " +
                         std::to_string(a.size()));
    }
    const PolySequence ix = continuous_invert(a, "x");
    const Var x = Var::named("x");
    std::vector<HankelReport> reports;
    for (unsigned k = 0; k <= kmax; ++k) {
        HankelReport rep{"conjecture-i", k, "x", static_cast<int>(k), {}};
        for (unsigned n = 1; n <= nmax; ++n) {
            HankelRow row;
            row.n = n;
            row.det = det(hankel_matrix(ix, n, k));
            row.degree = row.det.degree(x);
            row.ok = row.degree <= static_cast<int>(k);
            rep.rows.push_back(std::move(row));
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<HankelReport> conjecture_i_report(const Sequence<Rational>& a, unsigned kmax, unsigned nmax,
                                              const SizeBudget& budget) {
    return conjecture_i_report(lift(a), kmax, nmax, budget);
}

HankelReport conjecture_ii_report(const PQContext& ctx, unsigned nmax, const SizeBudget& budget) {
    budget.require(nmax, ctx.is_symbolic());
    const unsigned needed = nmax == 0 ? 0 : 2 * (nmax - 1);
    if (ctx.order() < needed) {
        throw PrecisionError("conjecture (ii) report needs a context of order " + std::to_string(needed));
    }
    std::vector<MPoly> q;
    for (unsigned n = 0; n <= needed; ++n) {
        q.push_back(q_sequence(ctx, n));
    }
    const Var s1 = Var::indexed("s", 1);
    HankelReport rep{"conjecture-ii", 0, "s1", 0, {}};
    for (unsigned n = 1; n <= nmax; ++n) {
        HankelRow row;
        row.n = n;
        row.det = det(hankel_matrix(q, n));
        row.degree = row.det.degree(s1);
        row.ok = row.degree <= 0;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace dlinv
