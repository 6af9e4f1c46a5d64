#include "dlinv/compose.hpp"

#include "dlinv/interpolate.hpp"

namespace dlinv {

IterableSeries::IterableSeries(TruncatedSeries<MPoly> f) : f_(std::move(f)) {
    if (f_.order() < 1) {
        throw InputError("an iterable series needs order >= 1");
    }
    if (!f_.coeffs()[0].is_zero() || !(f_.coeffs()[1] == MPoly(1))) {
        throw InputError("iterable series must start t + O(t^2), got " + f_.to_string());
    }
}

IterableSeries IterableSeries::symbolic(unsigned order) {
    std::vector<MPoly> c(order + 1, MPoly(0));
    if (order >= 1) {
        c[1] = MPoly(1);
    }
    for (unsigned i = 2; i <= order; ++i) {
        c[i] = MPoly(Var::indexed("a", i));
    }
    return IterableSeries(TruncatedSeries<MPoly>("t", std::move(c)));
}

IterableSeries IterableSeries::numeric(const std::vector<Rational>& higher, unsigned order) {
    std::vector<MPoly> c(order + 1, MPoly(0));
    if (order >= 1) {
        c[1] = MPoly(1);
    }
    for (unsigned i = 2; i <= order && i - 2 < higher.size(); ++i) {
        c[i] = MPoly(higher[i - 2]);
    }
    return IterableSeries(TruncatedSeries<MPoly>("t", std::move(c)));
}

TruncatedSeries<MPoly> compose_iterate_integer(const IterableSeries& f, unsigned k) {
    auto acc = TruncatedSeries<MPoly>::identity("t", f.order());
    for (unsigned i = 0; i < k; ++i) {
        acc = series_compose(f.series(), acc);
    }
    return acc;
}

namespace {

// f^{o0}, ..., f^{o(count-1)}
std::vector<TruncatedSeries<MPoly>> iterates(const IterableSeries& f, unsigned count, unsigned order) {
    std::vector<TruncatedSeries<MPoly>> out;
    const IterableSeries g(truncate(f.series(), order));
    auto acc = TruncatedSeries<MPoly>::identity("t", order);
    for (unsigned k = 0; k < count; ++k) {
        out.push_back(acc);
        if (k + 1 < count) {
            acc = series_compose(g.series(), acc);
        }
    }
    return out;
}

TruncatedSeries<MPoly> as_series(const PolySequence& c) {
    return TruncatedSeries<MPoly>("t", c);
}

} // namespace

PolySequence c_polynomials(const IterableSeries& f, unsigned order, std::string_view var) {
    if (order > f.order()) {
        throw PrecisionError("C_" + std::to_string(order) + " needs a series of order " + std::to_string(order));
    }
    const Var v = Var::named(var);
    const auto its = iterates(f, std::max(order, 1u), order);
    PolySequence out{MPoly(0).with_universe({v})};
    for (unsigned n = 1; n <= order; ++n) {
        std::vector<InterpolationPoint> pts;
        for (unsigned k = 0; k < n; ++k) {
            pts.push_back({Rational(static_cast<long>(k)), its[k].coeffs()[n]});
        }
        out.push_back(lagrange_interpolate(pts, var));
    }
    return out;
}

CheckResult c_difference_check(const IterableSeries& f, unsigned order) {
    const PolySequence c = c_polynomials(f, order, "k");
    const auto flow = as_series(c);
    const auto step = series_compose(truncate(f.series(), order), flow) - flow;
    const MPoly k1 = MPoly::var("k") + MPoly(1);
    for (unsigned n = 0; n <= order; ++n) {
        const MPoly lhs = c[n].substitute("k", k1) - c[n];
        if (!(lhs == step.coeffs()[n])) {
            return CheckResult::fail("C_" + std::to_string(n) + "(k+1) - C_" + std::to_string(n) +
                                     "(k): " + first_difference(lhs, step.coeffs()[n]));
        }
    }
    return CheckResult::pass();
}

CheckResult c_extrapolation_check(const IterableSeries& f, unsigned order) {
    const PolySequence c = c_polynomials(f, order, "x");
    const auto its = iterates(f, order + 1, order);
    for (unsigned k = 0; k <= order; ++k) {
        for (unsigned n = 1; n <= order; ++n) {
            const MPoly at_k = c[n].substitute("x", MPoly(static_cast<long>(k)));
            if (!(at_k == its[k].coeffs()[n])) {
                return CheckResult::fail("C_" + std::to_string(n) + "(" + std::to_string(k) +
                                         "): " + first_difference(at_k, its[k].coeffs()[n]));
            }
        }
    }
    return CheckResult::pass();
}

CheckResult compose_group_law_check(const IterableSeries& f, unsigned order) {
    const PolySequence cx = c_polynomials(f, order, "x");
    const PolySequence cy = c_polynomials(f, order, "y");
    const MPoly sum = MPoly::var("x") + MPoly::var("y");
    PolySequence cxy;
    for (const auto& p : cx) {
        cxy.push_back(p.substitute("x", sum));
    }
    const auto lhs = series_compose(as_series(cx), as_series(cy));
    return compare_entries(lhs.coeffs(), cxy, "f^(ox) o f^(oy) vs f^(o(x+y))");
}

} // namespace dlinv
