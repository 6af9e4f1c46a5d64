#include "dlinv/verify.hpp"

#include <algorithm>

#include "dlinv/compose.hpp"
#include "dlinv/hankel.hpp"
#include "dlinv/invert.hpp"
#include "dlinv/partition.hpp"
#include "dlinv/pq.hpp"

namespace dlinv {

std::vector<Rational> RandomSource::integers(std::size_t n, long lo, long hi) {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(integer(lo, hi));
    }
    return out;
}

std::vector<Rational> RandomSource::rationals(std::size_t n) {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(rational());
    }
    return out;
}

namespace {

std::vector<MPoly> lift(const std::vector<Rational>& v) {
    return std::vector<MPoly>(v.begin(), v.end());
}

CheckResult check_thm_a(const VerifyOptions& opt) {
    if (auto r = verify_thmA(PQContext::symbolic(opt.order), opt.order); !r) {
        return CheckResult::fail("symbolic order " + std::to_string(opt.order) + ": " + r.detail);
    }
    RandomSource rnd(opt.seed);
    for (unsigned i = 0; i < opt.samples; ++i) {
        auto s = rnd.rationals(opt.numeric_order + 1);
        s[0] = Rational(1);
        if (auto r = verify_thmA(PQContext::numeric(s, opt.numeric_order), opt.numeric_order); !r) {
            return CheckResult::fail("random sample " + std::to_string(i) + ": " + r.detail);
        }
    }
    return CheckResult::pass("symbolic N=" + std::to_string(opt.order) + ", " + std::to_string(opt.samples) +
                             " rational samples at N=" + std::to_string(opt.numeric_order));
}

CheckResult check_qx_link(const VerifyOptions& opt) {
    if (auto r = qx_invert_link(PQContext::symbolic(opt.order), opt.order); !r) {
        return CheckResult::fail("symbolic: " + r.detail);
    }
    RandomSource rnd(opt.seed);
    for (unsigned i = 0; i < opt.samples; ++i) {
        auto s = rnd.rationals(opt.numeric_order + 1);
        s[0] = Rational(1);
        if (auto r = qx_invert_link(PQContext::numeric(s, opt.numeric_order), opt.numeric_order); !r) {
            return CheckResult::fail("random sample " + std::to_string(i) + ": " + r.detail);
        }
    }
    return CheckResult::pass();
}

CheckResult check_formule_p(const VerifyOptions& opt) {
    const PQContext ctx = PQContext::symbolic(opt.order);
    for (unsigned n = 0; n <= opt.order; ++n) {
        const MPoly closed = formuleP_closed(ctx, n);
        const MPoly rec = p_sequence(ctx, n);
        if (!(closed == rec)) {
            return CheckResult::fail("P_" + std::to_string(n) + ": " + first_difference(closed, rec));
        }
    }
    return CheckResult::pass();
}

CheckResult check_formule_i(const VerifyOptions& opt) {
    Sequence<MPoly> a = symbolic_sequence("a", opt.order);
    a[0] = MPoly(1);
    const PolySequence ix = continuous_invert(a, "x");
    for (unsigned n = 0; n <= opt.order; ++n) {
        const MPoly closed = formuleI_closed(n);
        if (!(closed == ix[n])) {
            return CheckResult::fail("I_" + std::to_string(n) + ": " + first_difference(closed, ix[n]));
        }
    }
    return CheckResult::pass();
}

Sequence<Rational> repeated_invert(Sequence<Rational> a, long k) {
    for (long i = 0; i < std::abs(k); ++i) {
        a = k > 0 ? invert_transform(a) : invert_inverse(a);
    }
    return a;
}

CheckResult check_integer_iterates(const VerifyOptions& opt) {
    RandomSource rnd(opt.seed);
    const Var x = Var::named("x");
    for (unsigned i = 0; i < opt.samples; ++i) {
        const auto a = rnd.integers(opt.numeric_order + 1, -9, 9);
        const PolySequence ix = continuous_invert(a, "x");
        for (long k = -3; k <= 3; ++k) {
            const auto closed = iterate_invert(a, k);
            const auto repeated = repeated_invert(a, k);
            if (closed != repeated) {
                return CheckResult::fail("sample " + std::to_string(i) + ", k=" + std::to_string(k) +
                                         ": closed form differs from repeated transform");
            }
            std::vector<MPoly> spec;
            for (const auto& p : ix) {
                spec.push_back(p.substitute({{x, MPoly(k)}}));
            }
            if (auto r = compare_entries(spec, lift(closed), "I^x at x=" + std::to_string(k)); !r) {
                return CheckResult::fail("sample " + std::to_string(i) + ": " + r.detail);
            }
        }
    }
    return CheckResult::pass();
}

CheckResult check_r_identity(const VerifyOptions& opt) {
    unsigned count = 0;
    for (unsigned m = 0; m <= opt.weight; ++m) {
        for (const Partition& nu : partitions(m)) {
            ++count;
            if (!r_difference_check(nu)) {
                return CheckResult::fail("difference identity fails for " + nu.to_string());
            }
        }
    }
    for (unsigned k = 1; k <= opt.weight; ++k) {
        const Partition ones(std::vector<unsigned>{k});
        const Rational at = r_poly(ones).evaluate({{Var::named("x"), Rational(static_cast<long>(k) - 1)}});
        if (!at.is_zero()) {
            return CheckResult::fail("R_" + ones.to_string() + "(" + std::to_string(k - 1) + ") = " + at.to_string());
        }
    }
    return CheckResult::pass(std::to_string(count) + " partitions");
}

CheckResult check_layman(const VerifyOptions& opt) {
    RandomSource rnd(opt.seed);
    constexpr unsigned kSequences = 50;
    constexpr unsigned kCount = 6;
    for (unsigned i = 0; i < kSequences; ++i) {
        const auto a = rnd.integers(2 * kCount - 1, -5, 5);
        if (auto r = layman_check(a, kCount); !r) {
            return CheckResult::fail("sequence " + std::to_string(i) + ": " + r.detail);
        }
    }
    return CheckResult::pass();
}

CheckResult check_continuous_layman(const VerifyOptions& opt) {
    const unsigned len = 2 * opt.hankel_count - 1;
    if (auto r = continuous_layman_check(symbolic_sequence("a", len - 1), opt.hankel_count); !r) {
        return CheckResult::fail("symbolic: " + r.detail);
    }
    RandomSource rnd(opt.seed);
    for (unsigned i = 0; i < opt.samples; ++i) {
        if (auto r = continuous_layman_check(rnd.integers(2 * 6 - 1, -5, 5), 6); !r) {
            return CheckResult::fail("random sample " + std::to_string(i) + ": " + r.detail);
        }
    }
    return CheckResult::pass();
}

CheckResult check_toeplitz(const VerifyOptions& opt) {
    RandomSource rnd(opt.seed);
    for (unsigned i = 0; i < opt.samples; ++i) {
        const auto a = rnd.integers(opt.order + 1, -9, 9);
        const auto b = invert_transform(a);
        for (unsigned n = 0; n <= opt.order; ++n) {
            const Rational got = toeplitz_recover(b, n);
            if (got != a[n]) {
                return CheckResult::fail("sample " + std::to_string(i) + ", n=" + std::to_string(n) + ": got " +
                                         got.to_string() + ", expected " + a[n].to_string());
            }
        }
    }
    const auto a = symbolic_sequence("a", opt.order);
    const auto b = invert_transform(a);
    for (unsigned n = 0; n <= opt.order; ++n) {
        const MPoly got = toeplitz_recover(b, n);
        if (!(got == a[n])) {
            return CheckResult::fail("symbolic n=" + std::to_string(n) + ": " + first_difference(got, a[n]));
        }
    }
    return CheckResult::pass();
}

CheckResult check_c_difference(const VerifyOptions& opt) {
    const auto f = IterableSeries::symbolic(opt.order);
    if (auto r = c_difference_check(f, opt.order); !r) {
        return r;
    }
    if (auto r = c_extrapolation_check(f, opt.order); !r) {
        return CheckResult::fail("extrapolation: " + r.detail);
    }
    const auto c = c_polynomials(f, opt.order);
    if (!(c[1] == MPoly(1))) {
        return CheckResult::fail("C_1 = " + c[1].to_string());
    }
    for (unsigned n = 1; n <= opt.order; ++n) {
        if (c[n].degree(Var::named("x")) > static_cast<int>(n) - 1) {
            return CheckResult::fail("deg C_" + std::to_string(n) + " exceeds " + std::to_string(n - 1));
        }
    }
    return CheckResult::pass();
}

CheckResult check_invert_group_law(const VerifyOptions& opt) {
    return group_law_check(opt.group_order);
}

CheckResult check_compose_group_law(const VerifyOptions& opt) {
    return compose_group_law_check(IterableSeries::symbolic(opt.group_order), opt.group_order);
}

CheckResult check_homogeneity(const VerifyOptions& opt) {
    for (unsigned n = 0; n <= opt.order; ++n) {
        if (auto r = homogeneity_check(n); !r) {
            return r;
        }
    }
    return CheckResult::pass();
}

std::vector<RegisteredCheck> build_registry() {
    std::vector<RegisteredCheck> checks{
        {"thmA", "generating series of Q_n(x) satisfies the functional equation", check_thm_a},
        {"qx-link", "I^x(Q(0)) = Q(-x)", check_qx_link},
        {"formuleP", "partition closed form of P_n equals the truncation recursion", check_formule_p},
        {"formuleI", "partition closed form of I_n(x) equals the interpolated transform (a_0 = 1)", check_formule_i},
        {"integer-iterates", "I^k closed form equals k-fold transform; I^x specializes at integers", check_integer_iterates},
        {"r-identity", "R_nu finite-difference identity and common root of R_(1^k)", check_r_identity},
        {"layman", "a and I(a) share their Hankel transform", check_layman},
        {"continuous-layman", "Hankel transform of I^x(a) is free of x", check_continuous_layman},
        {"toeplitz", "Toeplitz determinant of I(a) recovers a_n", check_toeplitz},
        {"c-difference", "C_n finite-difference recurrence, degree bound and extrapolation", check_c_difference},
        {"invert-group-law", "I^x(I^y(a)) = I^(x+y)(a)", check_invert_group_law},
        {"compose-group-law", "f^(ox) o f^(oy) = f^(o(x+y))", check_compose_group_law},
        {"homogeneity", "I_n(x; lam a) = lam I_n(lam x; a)", check_homogeneity},
    };
    std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return checks;
}

} // namespace

const std::vector<RegisteredCheck>& check_registry() {
    static const std::vector<RegisteredCheck> registry = build_registry();
    return registry;
}

const RegisteredCheck* find_check(std::string_view name) {
    for (const auto& c : check_registry()) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

} // namespace dlinv
