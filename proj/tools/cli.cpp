#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlinv/compose.hpp"
#include "dlinv/errors.hpp"
#include "dlinv/hankel.hpp"
#include "dlinv/invert.hpp"
#include "dlinv/pq.hpp"
#include "dlinv/verify.hpp"

namespace dlinv::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string format = "pretty";
    bool symbolic = false;
    std::string series;
    std::string seq;
    std::string coeffs;
    std::string power = "1";
    int order = -1;
    unsigned shift = 0;
    unsigned count = 0;
    unsigned kmax = 0;
    unsigned nmax = 3;
    std::string which = "i";
    std::string only;
    std::uint64_t seed = 0;
    unsigned weight = 6;
    unsigned samples = 20;
    unsigned numeric_order = 12;
    bool closed = false;
    bool toeplitz = false;
};

bool is_json(const RunConfig& cfg) {
    return cfg.format == "json";
}

template <class T>
std::vector<std::string> texts(const std::vector<T>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        out.push_back(e.to_string());
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

// Order from --order, bounded by what a literal provides; never pads.
unsigned resolve_order(const RunConfig& cfg, std::size_t available, unsigned fallback) {
    if (available == 0) {
        return cfg.order >= 0 ? static_cast<unsigned>(cfg.order) : fallback;
    }
    if (cfg.order < 0) {
        return static_cast<unsigned>(available - 1);
    }
    if (static_cast<std::size_t>(cfg.order) + 1 > available) {
        throw InputError("--order " + std::to_string(cfg.order) + " needs " + std::to_string(cfg.order + 1) +
                         " sequence entries, got " + std::to_string(available));
    }
    return static_cast<unsigned>(cfg.order);
}

bool parse_power(const std::string& text, long& k) {
    if (text == "x") {
        return false;
    }
    std::int64_t v = 0;
    if (!Rational::parse(text).to_int64(v)) {
        throw InputError("--power must be an integer or x, got '" + text + "'");
    }
    k = v;
    return true;
}

// ---------------------------------------------------------------- pq

int cmd_pq(const RunConfig& cfg, std::ostream& out) {
    if (cfg.symbolic == !cfg.series.empty()) {
        throw InputError("pq needs exactly one of --symbolic or --series");
    }
    const unsigned order = cfg.order >= 0 ? static_cast<unsigned>(cfg.order) : 4;
    const PQContext ctx = cfg.symbolic ? PQContext::symbolic(order) : PQContext::numeric(parse_sequence(cfg.series), order);
    json rows = json::array();
    for (unsigned n = 0; n <= order; ++n) {
        const MPoly p = cfg.closed ? formuleP_closed(ctx, n) : p_sequence(ctx, n);
        const MPoly q = q_sequence(ctx, n);
        if (is_json(cfg)) {
            rows.push_back({{"kind", "pq"}, {"n", n}, {"P", p.to_string()}, {"Q", q.to_string()}});
        } else {
            out << "P_" << n << " = " << p << "\n";
            out << "Q_" << n << " = " << q << "\n";
        }
    }
    if (is_json(cfg)) {
        out << rows.dump() << "\n";
    }
    return kSuccess;
}

// ---------------------------------------------------------------- invert

template <class Seq>
void emit_sequence(const RunConfig& cfg, std::ostream& out, const Seq& seq, bool polys, unsigned order) {
    const auto entries = texts(seq);
    if (is_json(cfg)) {
        out << json{{"kind", polys ? "poly-sequence" : "sequence"}, {"order", order}, {"entries", entries}}.dump() << "\n";
    } else {
        out << join(entries, polys ? ", " : ",") << "\n";
    }
}

int cmd_invert(const RunConfig& cfg, std::ostream& out) {
    if (cfg.symbolic == !cfg.seq.empty() && !cfg.closed) {
        throw InputError("invert needs exactly one of --symbolic or --seq");
    }
    if (cfg.closed) {
        // partition closed form, a_0 = 1
        const unsigned order = cfg.order >= 0 ? static_cast<unsigned>(cfg.order) : 4;
        PolySequence seq;
        for (unsigned n = 0; n <= order; ++n) {
            seq.push_back(formuleI_closed(n));
        }
        emit_sequence(cfg, out, seq, true, order);
        return kSuccess;
    }
    long k = 0;
    const bool integer_power = parse_power(cfg.power, k);
    if (cfg.symbolic) {
        const unsigned order = resolve_order(cfg, 0, 4);
        const auto a = symbolic_sequence("a", order);
        if (cfg.toeplitz) {
            PolySequence rec;
            for (unsigned n = 0; n <= order; ++n) {
                rec.push_back(toeplitz_recover(a, n));
            }
            emit_sequence(cfg, out, rec, true, order);
        } else if (integer_power) {
            emit_sequence(cfg, out, iterate_invert(a, k), true, order);
        } else {
            emit_sequence(cfg, out, continuous_invert(a, "x"), true, order);
        }
        return kSuccess;
    }
    const auto literal = parse_sequence(cfg.seq);
    const unsigned order = resolve_order(cfg, literal.size(), 0);
    const Sequence<Rational> a(literal.begin(), literal.begin() + order + 1);
    if (cfg.toeplitz) {
        Sequence<Rational> rec;
        for (unsigned n = 0; n <= order; ++n) {
            rec.push_back(toeplitz_recover(a, n));
        }
        emit_sequence(cfg, out, rec, false, order);
    } else if (integer_power) {
        emit_sequence(cfg, out, iterate_invert(a, k), false, order);
    } else {
        emit_sequence(cfg, out, continuous_invert(a, "x"), true, order);
    }
    return kSuccess;
}

// ---------------------------------------------------------------- hankel

int cmd_hankel(const RunConfig& cfg, std::ostream& out) {
    if (cfg.symbolic == !cfg.seq.empty()) {
        throw InputError("hankel needs exactly one of --symbolic or --seq");
    }
    const SizeBudget budget = SizeBudget::from_env();
    std::vector<std::string> entries;
    if (cfg.symbolic) {
        const unsigned count = cfg.count == 0 ? 3 : cfg.count;
        budget.require(count, true);
        const auto a = symbolic_sequence("a", 2 * (count - 1) + cfg.shift);
        entries = texts(hankel_transform(a, count, cfg.shift));
    } else {
        const auto a = parse_sequence(cfg.seq);
        unsigned count = cfg.count;
        if (count == 0) {
            count = a.size() > cfg.shift ? static_cast<unsigned>((a.size() - cfg.shift + 1) / 2) : 0;
        }
        budget.require(count, false);
        entries = texts(hankel_transform(a, count, cfg.shift));
    }
    if (is_json(cfg)) {
        out << json{{"kind", "hankel-transform"}, {"shift", cfg.shift}, {"entries", entries}}.dump() << "\n";
    } else {
        out << join(entries, cfg.symbolic ? ", " : ",") << "\n";
    }
    return kSuccess;
}

// ---------------------------------------------------------------- compose

int cmd_compose(const RunConfig& cfg, std::ostream& out) {
    if (cfg.coeffs.empty()) {
        throw InputError("compose needs --coeffs (\"a\" for symbolic, or a2,a3,... rationals)");
    }
    const unsigned order = cfg.order >= 0 ? static_cast<unsigned>(cfg.order) : 4;
    if (order < 1) {
        throw InputError("compose needs --order >= 1");
    }
    const IterableSeries f = cfg.coeffs == "a" ? IterableSeries::symbolic(order)
                                               : IterableSeries::numeric(parse_sequence(cfg.coeffs), order);
    long k = 0;
    if (parse_power(cfg.power, k)) {
        if (k < 0) {
            throw InputError("integer composition powers must be >= 0");
        }
        const auto it = compose_iterate_integer(f, static_cast<unsigned>(k));
        if (is_json(cfg)) {
            out << json{{"kind", "series"}, {"var", it.var()}, {"order", it.order()}, {"coeffs", texts(it.coeffs())}}.dump()
                << "\n";
        } else {
            out << it.to_string() << "\n";
        }
        return kSuccess;
    }
    const PolySequence c = c_polynomials(f, order, "x");
    std::vector<std::string> entries = texts(c);
    entries.erase(entries.begin()); // C_0 = 0
    if (is_json(cfg)) {
        out << json{{"kind", "compose-iterate"}, {"N", order}, {"C", entries}}.dump() << "\n";
    } else {
        for (unsigned n = 1; n <= order; ++n) {
            out << "C_" << n << " = " << entries[n - 1] << "\n";
        }
    }
    return kSuccess;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<const RegisteredCheck*> selected;
    if (!cfg.only.empty()) {
        const RegisteredCheck* c = find_check(cfg.only);
        if (c == nullptr) {
            std::string names;
            for (const auto& r : check_registry()) {
                names += (names.empty() ? "" : ", ") + r.name;
            }
            throw InputError("unknown check '" + cfg.only + "' (registered: " + names + ")");
        }
        selected.push_back(c);
    } else {
        for (const auto& r : check_registry()) {
            selected.push_back(&r);
        }
    }
    VerifyOptions opt;
    if (cfg.order >= 0) {
        opt.order = static_cast<unsigned>(cfg.order);
    }
    opt.seed = cfg.seed;
    opt.weight = cfg.weight;
    opt.samples = cfg.samples;
    opt.numeric_order = cfg.numeric_order;

    bool all_ok = true;
    json results = json::array();
    if (!is_json(cfg)) {
        out << "seed = " << opt.seed << ", order = " << opt.order << "\n";
    }
    for (const RegisteredCheck* c : selected) {
        const CheckResult r = c->run(opt);
        all_ok = all_ok && r.ok;
        if (is_json(cfg)) {
            results.push_back({{"name", c->name}, {"ok", r.ok}, {"detail", r.detail}});
        } else {
            out << (r.ok ? "PASS " : "FAIL ") << c->name;
            if (!r.detail.empty()) {
                out << ": " << r.detail;
            }
            out << "\n";
        }
    }
    if (is_json(cfg)) {
        out << json{{"kind", "verify"}, {"seed", opt.seed}, {"order", opt.order}, {"ok", all_ok}, {"results", results}}.dump()
            << "\n";
    }
    return all_ok ? kSuccess : kIdentityFailure;
}

// ---------------------------------------------------------------- conjecture

json report_json(const HankelReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json r{{"n", row.n}, {"det", row.det.to_string()}, {"deg_x", row.det.degree("x")}};
        if (rep.measured_var != "x") {
            r["deg_" + rep.measured_var] = row.degree;
        }
        r["verdict"] = row.ok ? "ok" : "exceeds";
        rows.push_back(std::move(r));
    }
    return json{{"kind", "hankel-report"}, {"shift", rep.shift}, {"rows", rows}};
}

int cmd_conjecture(const RunConfig& cfg, std::ostream& out) {
    const SizeBudget budget = SizeBudget::from_env();
    std::vector<HankelReport> reports;
    if (cfg.which == "i") {
        const unsigned len = cfg.nmax == 0 ? 1 : 2 * (cfg.nmax - 1) + cfg.kmax + 1;
        if (!cfg.seq.empty()) {
            reports = conjecture_i_report(parse_sequence(cfg.seq), cfg.kmax, cfg.nmax, budget);
        } else {
            reports = conjecture_i_report(symbolic_sequence("a", len - 1), cfg.kmax, cfg.nmax, budget);
        }
    } else if (cfg.which == "ii") {
        const unsigned order = cfg.nmax == 0 ? 0 : 2 * (cfg.nmax - 1);
        const PQContext ctx = cfg.series.empty() ? PQContext::symbolic(order)
                                                 : PQContext::numeric(parse_sequence(cfg.series), order);
        reports.push_back(conjecture_ii_report(ctx, cfg.nmax, budget));
    } else {
        throw InputError("--which must be i or ii");
    }
    if (is_json(cfg)) {
        json all = json::array();
        for (const auto& rep : reports) {
            all.push_back(report_json(rep));
        }
        out << all.dump() << "\n";
        return kSuccess;
    }
    for (const auto& rep : reports) {
        if (rep.kind == "conjecture-ii") {
            for (const auto& row : rep.rows) {
                out << "n=" << row.n << ": " << (row.ok ? "s1-free" : "depends on s1") << " (det = " << row.det << ")\n";
            }
            continue;
        }
        out << "shift k=" << rep.shift << " (bound deg_x <= " << rep.bound << ")\n";
        for (const auto& row : rep.rows) {
            out << "  n=" << row.n << ": deg_x " << row.degree << " " << (row.ok ? "ok" : "exceeds") << " (det = " << row.det
                << ")\n";
        }
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact limited expansions, Invert transforms and Hankel determinants", "dlinv"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"pretty", "json"}));
        sub->add_option("--order", cfg.order, "Truncation order N");
    };

    auto* pq = app.add_subcommand("pq", "P_n and Q_n of a source series s(x)");
    add_common(pq);
    pq->add_flag("--symbolic", cfg.symbolic, "Use indeterminates s1..sN");
    pq->add_option("--series", cfg.series, "Coefficients s0,s1,... (s0 = 1)");
    pq->add_flag("--closed", cfg.closed, "Compute P_n from the partition closed form");

    auto* inv = app.add_subcommand("invert", "Invert transform, its iterates and interpolation");
    add_common(inv);
    inv->add_flag("--symbolic", cfg.symbolic, "Use indeterminates a0..aN");
    inv->add_option("--seq", cfg.seq, "Sequence literal, e.g. 1,2,5/3");
    inv->add_option("--power", cfg.power, "Integer k, or x for the interpolating polynomials");
    inv->add_flag("--closed", cfg.closed, "Partition closed form of I_n(x) with a0 = 1");
    inv->add_flag("--toeplitz", cfg.toeplitz, "Treat the input as b = I(a) and recover a by Toeplitz determinants");

    auto* hk = app.add_subcommand("hankel", "Hankel transform");
    add_common(hk);
    hk->add_flag("--symbolic", cfg.symbolic, "Use indeterminates a0..");
    hk->add_option("--seq", cfg.seq, "Sequence literal");
    hk->add_option("--count", cfg.count, "Number of determinants");
    hk->add_option("--shift", cfg.shift, "Hankel shift k");

    auto* cmp = app.add_subcommand("compose", "Continuous iteration of f(t) = t + a2 t^2 + ...");
    add_common(cmp);
    cmp->add_option("--coeffs", cfg.coeffs, "\"a\" for symbolic a2..aN, or rationals a2,a3,...");
    cmp->add_option("--power", cfg.power, "Integer k, or x for C_n(x)");

    auto* ver = app.add_subcommand("verify", "Run the identity battery");
    add_common(ver);
    ver->add_option("--only", cfg.only, "Run a single registered check");
    ver->add_option("--seed", cfg.seed, "Random seed");
    ver->add_option("--weight", cfg.weight, "Max partition weight for r-identity");
    ver->add_option("--samples", cfg.samples, "Random specializations per check");
    ver->add_option("--numeric-order", cfg.numeric_order, "Order of randomized numeric runs");

    auto* conj = app.add_subcommand("conjecture", "Exploratory determinant-degree reports");
    add_common(conj);
    conj->add_option("--which", cfg.which, "i or ii");
    conj->add_option("--kmax", cfg.kmax, "Largest Hankel shift for (i)");
    conj->add_option("--nmax", cfg.nmax, "Largest determinant size");
    conj->add_option("--seq", cfg.seq, "Numeric sequence for (i) instead of a0..");
    conj->add_option("--series", cfg.series, "Numeric source series for (ii) instead of s1..");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (pq->parsed()) return cmd_pq(cfg, out);
        if (inv->parsed()) return cmd_invert(cfg, out);
        if (hk->parsed()) return cmd_hankel(cfg, out);
        if (cmp->parsed()) return cmd_compose(cfg, out);
        if (ver->parsed()) return cmd_verify(cfg, out);
        if (conj->parsed()) return cmd_conjecture(cfg, out);
    } catch (const ResourceError& e) {
        err << "dlinv: " << e.what() << "\n";
        return kResourceExceeded;
    } catch (const InvariantError& e) {
        err << "dlinv: internal invariant violated: " << e.what() << "\n";
        throw;
    } catch (const std::exception& e) {
        err << "dlinv: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

} // namespace dlinv::cli
