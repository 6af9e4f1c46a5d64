#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "dlinv/compose.hpp"
#include "dlinv/errors.hpp"
#include "dlinv/hankel.hpp"
#include "dlinv/invert.hpp"
#include "dlinv/pq.hpp"
#include "dlinv/verify.hpp"

namespace py = pybind11;
using namespace dlinv;

namespace {

// Sequences cross the boundary as lists of strings; ints are accepted too.
std::vector<MPoly> to_polys(const std::vector<py::object>& items) {
    std::vector<MPoly> out;
    out.reserve(items.size());
    for (const auto& item : items) {
        if (py::isinstance<MPoly>(item)) {
            out.push_back(item.cast<MPoly>());
        } else {
            out.push_back(MPoly::parse(py::str(item).cast<std::string>()));
        }
    }
    return out;
}

std::vector<Rational> to_rationals(const std::vector<py::object>& items) {
    std::vector<Rational> out;
    out.reserve(items.size());
    for (const auto& item : items) {
        out.push_back(Rational::parse(py::str(item).cast<std::string>()));
    }
    return out;
}

template <class R>
std::vector<std::string> texts(const std::vector<R>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        out.push_back(x.to_string());
    }
    return out;
}

PQContext make_context(unsigned order, const std::optional<std::vector<py::object>>& series) {
    return series ? PQContext::numeric(to_rationals(*series), order) : PQContext::symbolic(order);
}

IterableSeries make_iterable(unsigned order, const std::optional<std::vector<py::object>>& higher) {
    return higher ? IterableSeries::numeric(to_rationals(*higher), order) : IterableSeries::symbolic(order);
}

py::dict report_dict(const HankelReport& r) {
    py::list rows;
    for (const auto& row : r.rows) {
        py::dict d;
        d["n"] = row.n;
        d["det"] = row.det.to_string();
        d["degree"] = row.degree;
        d["ok"] = row.ok;
        rows.append(d);
    }
    py::dict out;
    out["kind"] = r.kind;
    out["shift"] = r.shift;
    out["measured_var"] = r.measured_var;
    out["bound"] = r.bound;
    out["rows"] = rows;
    return out;
}

} // namespace

PYBIND11_MODULE(dlinv, m) {
    m.doc() = "Exact invert-transform, Hankel and series-iteration toolkit";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ValueError);
    py::register_exception<NotInvertibleError>(m, "NotInvertibleError", PyExc_ArithmeticError);
    py::register_exception<CompositionDomainError>(m, "CompositionDomainError", PyExc_ValueError);
    py::register_exception<UnknownVariableError>(m, "UnknownVariableError", PyExc_KeyError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

    py::class_<MPoly>(m, "Poly")
        .def(py::init([](const std::string& text, const std::vector<std::string>& universe) {
                 std::vector<Var> extra;
                 for (const auto& name : universe) {
                     const MPoly v = MPoly::parse(name);
                     if (v.size() != 1 || v.total_degree() != 1 || !v.leading_term().coeff.is_one()) {
                         throw InputError("'" + name + "' is not an indeterminate");
                     }
                     extra.push_back(v.leading_term().mono.powers().front().var);
                 }
                 return MPoly::parse(text).with_universe(extra);
             }),
             py::arg("text"), py::arg("universe") = std::vector<std::string>{},
             "Parses text; universe names further indeterminates that substitute may target")
        .def(py::init([](long c) { return MPoly(c); }))
        .def("degree", [](const MPoly& p, const std::string& var) { return p.degree(var); }, py::arg("var"))
        .def("total_degree", &MPoly::total_degree)
        .def("is_zero", &MPoly::is_zero)
        .def(
            "substitute",
            [](const MPoly& p, const std::string& var, const py::object& value) {
                return p.substitute(var, to_polys({value}).front());
            },
            py::arg("var"), py::arg("value"))
        .def("__pow__", [](const MPoly& p, unsigned e) { return p.pow(e); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &MPoly::to_string)
        .def("__repr__", [](const MPoly& p) { return "Poly('" + p.to_string() + "')"; });

    m.def(
        "p_sequence",
        [](unsigned order, const std::optional<std::vector<py::object>>& series) {
            const auto ctx = make_context(order, series);
            std::vector<std::string> out;
            for (unsigned n = 0; n <= order; ++n) {
                out.push_back(p_sequence(ctx, n).to_string());
            }
            return out;
        },
        py::arg("order"), py::arg("series") = py::none(), "P_0..P_order, symbolic in s1.. unless series is given");
    m.def(
        "q_sequence",
        [](unsigned order, const std::optional<std::vector<py::object>>& series) {
            const auto ctx = make_context(order, series);
            std::vector<std::string> out;
            for (unsigned n = 0; n <= order; ++n) {
                out.push_back(q_sequence(ctx, n).to_string());
            }
            return out;
        },
        py::arg("order"), py::arg("series") = py::none());

    m.def("symbolic_sequence", [](const std::string& stem, unsigned order) {
        return texts(symbolic_sequence(stem, order));
    });
    m.def(
        "invert_transform", [](const std::vector<py::object>& a) { return texts(invert_transform(to_polys(a))); },
        py::arg("seq"));
    m.def(
        "invert_inverse", [](const std::vector<py::object>& b) { return texts(invert_inverse(to_polys(b))); },
        py::arg("seq"));
    m.def(
        "iterate_invert",
        [](const std::vector<py::object>& a, long k) { return texts(iterate_invert(to_polys(a), k)); },
        py::arg("seq"), py::arg("k"));
    m.def(
        "continuous_invert",
        [](const std::vector<py::object>& a, const std::string& var) {
            return texts(continuous_invert(to_polys(a), var));
        },
        py::arg("seq"), py::arg("var") = "x", "Entries I_n(x) interpolating the integer iterates");
    m.def(
        "toeplitz_recover",
        [](const std::vector<py::object>& b, std::size_t n) { return toeplitz_recover(to_polys(b), n).to_string(); },
        py::arg("seq"), py::arg("n"));
    m.def(
        "hankel_transform",
        [](const std::vector<py::object>& s, std::size_t count, std::size_t shift) {
            return texts(hankel_transform(to_polys(s), count, shift));
        },
        py::arg("seq"), py::arg("count"), py::arg("shift") = 0);

    m.def(
        "compose_iterate",
        [](unsigned order, unsigned k, const std::optional<std::vector<py::object>>& higher) {
            return compose_iterate_integer(make_iterable(order, higher), k).to_string();
        },
        py::arg("order"), py::arg("k"), py::arg("coeffs") = py::none(),
        "f composed k times, f = t + a2 t^2 + ... (symbolic unless coeffs gives a2, a3, ...)");
    m.def(
        "c_polynomials",
        [](unsigned order, const std::optional<std::vector<py::object>>& higher) {
            return texts(c_polynomials(make_iterable(order, higher), order));
        },
        py::arg("order"), py::arg("coeffs") = py::none());

    m.def("check_names", [] {
        std::vector<std::string> out;
        for (const auto& c : check_registry()) {
            out.push_back(c.name);
        }
        return out;
    });
    m.def(
        "verify",
        [](const std::string& name, unsigned order, std::uint64_t seed) {
            const auto* check = find_check(name);
            if (check == nullptr) {
                throw InputError("unknown check '" + name + "'");
            }
            VerifyOptions opts;
            opts.order = order;
            opts.seed = seed;
            CheckResult r;
            {
                py::gil_scoped_release release;
                r = check->run(opts);
            }
            return py::make_tuple(r.ok, r.detail);
        },
        py::arg("name"), py::arg("order") = 8, py::arg("seed") = 0, "Runs one registered identity; (ok, detail)");
    m.def(
        "conjecture_ii",
        [](unsigned nmax) {
            const auto ctx = PQContext::symbolic(2 * nmax);
            return report_dict(conjecture_ii_report(ctx, nmax, SizeBudget::from_env()));
        },
        py::arg("nmax"));
}
