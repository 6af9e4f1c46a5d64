#include "dlinv/invert.hpp"

#include <map>

#include "dlinv/partition.hpp"

namespace dlinv {

CheckResult compare_entries(const std::vector<MPoly>& lhs, const std::vector<MPoly>& rhs, const std::string& label) {
    if (lhs.size() != rhs.size()) {
        return CheckResult::fail(label + ": length " + std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()));
    }
    for (std::size_t n = 0; n < lhs.size(); ++n) {
        if (!(lhs[n] == rhs[n])) {
            return CheckResult::fail(label + "[" + std::to_string(n) + "]: " + first_difference(lhs[n], rhs[n]));
        }
    }
    return CheckResult::pass();
}

Sequence<Rational> parse_sequence(std::string_view text) {
    Sequence<Rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

Sequence<MPoly> symbolic_sequence(std::string_view stem, unsigned order) {
    return indexed_symbols(stem, 0, order);
}

PolySequence continuous_invert(const Sequence<MPoly>& a, std::string_view var) {
    if (a.empty()) {
        throw InputError("empty sequence");
    }
    const Var v = Var::named(var);
    const auto series = generating_series(a);
    const auto denom = TruncatedSeries<MPoly>::one("t", series.order()) + shift_up(scale(series, MPoly(v)), 1);
    PolySequence out = (series * series_inverse(denom)).coeffs();
    for (auto& p : out) {
        p = p.with_universe({v});
    }
    return out;
}

PolySequence continuous_invert(const Sequence<Rational>& a, std::string_view var) {
    Sequence<MPoly> lifted;
    lifted.reserve(a.size());
    for (const auto& r : a) {
        lifted.emplace_back(r);
    }
    return continuous_invert(lifted, var);
}

MPoly formuleI_closed(unsigned n) {
    const MPoly x = MPoly::var("x");
    std::vector<MPoly> a = indexed_symbols("a", 0, n);
    a[0] = MPoly(1);
    MPoly total(0);
    for (unsigned k = 0; k <= n; ++k) {
        MPoly inner(0);
        for (const Partition& nu : partitions(n - k)) {
            const Rational weight = multinomial_ext(Rational(static_cast<long>(1 + k)), nu);
            if (!weight.is_zero()) {
                inner += partition_power(a, nu) * weight;
            }
        }
        total += (-x).pow(k) * inner;
    }
    std::vector<Var> vars{Var::named("x")};
    for (unsigned j = 1; j <= n; ++j) {
        vars.push_back(Var::indexed("a", j));
    }
    return total.with_universe(vars);
}

CheckResult group_law_check(unsigned order) {
    const Sequence<MPoly> a = symbolic_sequence("a", order);
    const PolySequence inner = continuous_invert(a, "y");
    const PolySequence composed = continuous_invert(inner, "x");
    const PolySequence direct = continuous_invert(a, "x");
    PolySequence shifted;
    shifted.reserve(direct.size());
    const MPoly sum = MPoly::var("x") + MPoly::var("y");
    for (const auto& p : direct) {
        shifted.push_back(p.substitute("x", sum));
    }
    return compare_entries(composed, shifted, "I^x(I^y(a)) vs I^(x+y)(a)");
}

CheckResult homogeneity_check(unsigned n) {
    const Var lam = Var::named("lam");
    const MPoly lam_p(lam);
    const MPoly x = MPoly::var("x");
    const Sequence<MPoly> a = symbolic_sequence("a", n);
    const MPoly in = continuous_invert(a, "x")[n].with_universe({lam});

    std::map<Var, MPoly> scaled_a;
    for (unsigned j = 0; j <= n; ++j) {
        scaled_a.emplace(Var::indexed("a", j), lam_p * a[j]);
    }
    const MPoly lhs = in.substitute(scaled_a);
    const MPoly rhs = lam_p * in.substitute("x", lam_p * x);
    if (lhs == rhs) {
        return CheckResult::pass();
    }
    return CheckResult::fail("I_" + std::to_string(n) + ": " + first_difference(lhs, rhs));
}

} // namespace dlinv
