#include "dlinv/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "dlinv/errors.hpp"

namespace dlinv {

// ---------------------------------------------------------------- Var

namespace {

constexpr unsigned kMaxStem = 4;

std::uint32_t pack_stem(std::string_view stem) {
    std::uint32_t v = 0;
    for (unsigned i = 0; i < kMaxStem; ++i) {
        v *= 27;
        if (i < stem.size()) {
            v += static_cast<std::uint32_t>(stem[i] - 'a' + 1);
        }
    }
    return v;
}

bool valid_stem(std::string_view stem) {
    if (stem.empty() || stem.size() > kMaxStem) {
        return false;
    }
    return std::all_of(stem.begin(), stem.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

} // namespace

Var Var::named(std::string_view name) {
    std::size_t split = 0;
    while (split < name.size() && std::isalpha(static_cast<unsigned char>(name[split]))) {
        ++split;
    }
    const std::string_view stem = name.substr(0, split);
    const std::string_view digits = name.substr(split);
    if (!valid_stem(stem)) {
        throw InputError("invalid indeterminate name '" + std::string(name) + "'");
    }
    if (digits.empty()) {
        return Var(pack_stem(stem) << 12);
    }
    if (digits.size() > 4 || (digits.size() > 1 && digits[0] == '0') ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw InputError("invalid indeterminate name '" + std::string(name) + "'");
    }
    return indexed(stem, static_cast<unsigned>(std::stoul(std::string(digits))));
}

Var Var::indexed(std::string_view stem, unsigned index) {
    if (!valid_stem(stem) || index > max_index) {
        throw InputError("invalid indeterminate " + std::string(stem) + std::to_string(index));
    }
    return Var((pack_stem(stem) << 12) | (index + 1));
}

std::string Var::name() const {
    std::uint32_t v = key_ >> 12;
    char buf[kMaxStem];
    for (int i = kMaxStem - 1; i >= 0; --i) {
        buf[i] = static_cast<char>(v % 27);
        v /= 27;
    }
    std::string out;
    for (char c : buf) {
        if (c != 0) {
            out.push_back(static_cast<char>('a' + c - 1));
        }
    }
    if (has_index()) {
        out += std::to_string(index());
    }
    return out;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t exp) {
    if (exp > 0) {
        powers_.push_back({v, exp});
        degree_ = exp;
    }
}

std::uint32_t Monomial::degree_in(Var v) const noexcept {
    for (const auto& p : powers_) {
        if (p.var == v) {
            return p.exp;
        }
    }
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto i = a.powers_.begin();
    auto j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
        if (i->var < j->var) {
            out.powers_.push_back(*i++);
        } else if (j->var < i->var) {
            out.powers_.push_back(*j++);
        } else {
            out.powers_.push_back({i->var, i->exp + j->exp});
            ++i;
            ++j;
        }
    }
    out.powers_.insert(out.powers_.end(), i, a.powers_.end());
    out.powers_.insert(out.powers_.end(), j, b.powers_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

bool Monomial::divide(const Monomial& d, Monomial& out) const {
    if (d.degree_ > degree_) {
        return false;
    }
    out.powers_.clear();
    auto i = powers_.begin();
    auto j = d.powers_.begin();
    while (j != d.powers_.end()) {
        if (i == powers_.end() || j->var < i->var) {
            return false;
        }
        if (i->var < j->var) {
            out.powers_.push_back(*i++);
            continue;
        }
        if (i->exp < j->exp) {
            return false;
        }
        if (i->exp > j->exp) {
            out.powers_.push_back({i->var, i->exp - j->exp});
        }
        ++i;
        ++j;
    }
    out.powers_.insert(out.powers_.end(), i, powers_.end());
    out.degree_ = degree_ - d.degree_;
    return true;
}

Monomial Monomial::without(Var v) const {
    Monomial out;
    for (const auto& p : powers_) {
        if (p.var != v) {
            out.powers_.push_back(p);
            out.degree_ += p.exp;
        }
    }
    return out;
}

std::string Monomial::to_string() const {
    if (powers_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& p : powers_) {
        if (!out.empty()) {
            out += '*';
        }
        out += p.var.name();
        if (p.exp != 1) {
            out += '^';
            out += std::to_string(p.exp);
        }
    }
    return out;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& p : powers_) {
        h ^= (static_cast<std::size_t>(p.var.key()) * 0x100000001b3ull + p.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

int grlex_compare(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree() ? -1 : 1;
    }
    const auto pa = a.powers();
    const auto pb = b.powers();
    std::size_t i = 0;
    for (; i < pa.size() && i < pb.size(); ++i) {
        if (pa[i].var != pb[i].var) {
            // the monomial holding the earlier variable has it with positive exponent
            return pa[i].var < pb[i].var ? 1 : -1;
        }
        if (pa[i].exp != pb[i].exp) {
            return pa[i].exp < pb[i].exp ? -1 : 1;
        }
    }
    if (i < pa.size()) {
        return 1;
    }
    if (i < pb.size()) {
        return -1;
    }
    return 0;
}

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

bool term_less(const Term& a, const Term& b) {
    return grlex_compare(a.mono, b.mono) < 0;
}

// Split into main-variable and parameter parts for display ordering.
std::pair<Monomial, Monomial> split_main(const Monomial& m) {
    Monomial main;
    Monomial param;
    for (const auto& p : m.powers()) {
        (p.var.has_index() ? param : main) = (p.var.has_index() ? param : main) * Monomial(p.var, p.exp);
    }
    return {main, param};
}

bool display_less(const Monomial& a, const Monomial& b) {
    const auto [am, ap] = split_main(a);
    const auto [bm, bp] = split_main(b);
    const int cm = grlex_compare(am, bm);
    if (cm != 0) {
        return cm < 0;
    }
    return grlex_compare(ap, bp) > 0;
}

const std::vector<Var>& empty_universe() {
    static const std::vector<Var> empty;
    return empty;
}

} // namespace

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const Rational& c) {
    if (!c.is_zero()) {
        terms_.push_back({Monomial(), c});
    }
}

MPoly::MPoly(Var v) : universe_(std::make_shared<const std::vector<Var>>(std::vector<Var>{v})) {
    terms_.push_back({Monomial(v), Rational(1)});
}

MPoly MPoly::term(const Rational& c, Monomial m) {
    MPoly p;
    if (!c.is_zero()) {
        std::vector<Var> vars;
        for (const auto& vp : m.powers()) {
            vars.push_back(vp.var);
        }
        if (!vars.empty()) {
            p.universe_ = std::make_shared<const std::vector<Var>>(std::move(vars));
        }
        p.terms_.push_back({std::move(m), c});
    }
    return p;
}

MPoly::Universe MPoly::merge(const Universe& a, const Universe& b) {
    if (!b || b->empty() || a == b) {
        return a;
    }
    if (!a || a->empty()) {
        return b;
    }
    if (std::includes(a->begin(), a->end(), b->begin(), b->end())) {
        return a;
    }
    if (std::includes(b->begin(), b->end(), a->begin(), a->end())) {
        return b;
    }
    std::vector<Var> out;
    std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(out));
    return std::make_shared<const std::vector<Var>>(std::move(out));
}

std::span<const Var> MPoly::universe() const noexcept {
    const auto& u = universe_ ? *universe_ : empty_universe();
    return {u.data(), u.size()};
}

bool MPoly::declares(Var v) const noexcept {
    const auto u = universe();
    return std::binary_search(u.begin(), u.end(), v);
}

MPoly MPoly::with_universe(std::span<const Var> extra) const {
    std::vector<Var> vars(extra.begin(), extra.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    MPoly out = *this;
    out.merge_universe(std::make_shared<const std::vector<Var>>(std::move(vars)));
    return out;
}

std::vector<Var> MPoly::occurring() const {
    std::vector<Var> vars;
    for (const auto& t : terms_) {
        for (const auto& p : t.mono.powers()) {
            vars.push_back(p.var);
        }
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool MPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

Rational MPoly::constant_term() const {
    if (!terms_.empty() && terms_.front().mono.is_unit()) {
        return terms_.front().coeff;
    }
    return Rational(0);
}

Rational MPoly::coefficient(const Monomial& m) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                     [](const Term& t, const Monomial& key) { return grlex_compare(t.mono, key) < 0; });
    if (it != terms_.end() && it->mono == m) {
        return it->coeff;
    }
    return Rational(0);
}

const Term& MPoly::leading_term() const {
    if (terms_.empty()) {
        throw InvariantError("leading term of the zero polynomial");
    }
    return terms_.back();
}

int MPoly::degree(Var v) const noexcept {
    if (terms_.empty()) {
        return -1;
    }
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.degree_in(v));
    }
    return static_cast<int>(d);
}

int MPoly::total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

MPoly MPoly::coefficient_of(Var v, std::uint32_t e) const {
    MPoly out;
    for (const auto& t : terms_) {
        if (t.mono.degree_in(v) == e) {
            out.terms_.push_back({t.mono.without(v), t.coeff});
        }
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    out.universe_ = universe_;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    merge_universe(o.universe_);
    if (o.terms_.empty()) {
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        const int c = grlex_compare(i->mono, j->mono);
        if (c < 0) {
            out.push_back(std::move(*i++));
        } else if (c > 0) {
            out.push_back(*j++);
        } else {
            Rational s = i->coeff + j->coeff;
            if (!s.is_zero()) {
                out.push_back({std::move(i->mono), std::move(s)});
            }
            ++i;
            ++j;
        }
    }
    for (; i != terms_.end(); ++i) {
        out.push_back(std::move(*i));
    }
    out.insert(out.end(), j, o.terms_.end());
    terms_ = std::move(out);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    return *this += -o;
}

MPoly operator-(MPoly a) {
    for (auto& t : a.terms_) {
        t.coeff = -t.coeff;
    }
    return a;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coeff *= c;
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    out.universe_ = MPoly::merge(a.universe_, b.universe_);
    if (a.terms_.empty() || b.terms_.empty()) {
        return out;
    }
    if (a.is_constant()) {
        MPoly r = b;
        r *= a.terms_[0].coeff;
        r.universe_ = out.universe_;
        return r;
    }
    if (b.is_constant()) {
        MPoly r = a;
        r *= b.terms_[0].coeff;
        r.universe_ = out.universe_;
        return r;
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono);
            it->second.add_product(ta.coeff, tb.coeff);
        }
    }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) {
            out.terms_.push_back({m, std::move(c)});
        }
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(1);
    result.universe_ = universe_;
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& values) const {
    for (const auto& [v, _] : values) {
        if (!declares(v)) {
            throw UnknownVariableError(v.name());
        }
    }
    // universe: drop substituted names, add those of the values
    std::vector<Var> kept;
    for (Var v : universe()) {
        if (!values.contains(v)) {
            kept.push_back(v);
        }
    }
    MPoly out;
    out.universe_ = std::make_shared<const std::vector<Var>>(std::move(kept));
    for (const auto& [_, val] : values) {
        out.merge_universe(val.universe_);
    }

    std::map<std::pair<Var, std::uint32_t>, MPoly> power_cache;
    auto power_of = [&](Var v, std::uint32_t e) -> const MPoly& {
        auto it = power_cache.find({v, e});
        if (it == power_cache.end()) {
            it = power_cache.emplace(std::make_pair(v, e), values.at(v).pow(e)).first;
        }
        return it->second;
    };

    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (const auto& t : terms_) {
        Monomial rest;
        MPoly factor(t.coeff);
        bool replaced = false;
        for (const auto& p : t.mono.powers()) {
            if (values.contains(p.var)) {
                factor = factor * power_of(p.var, p.exp);
                replaced = true;
            } else {
                rest = rest * Monomial(p.var, p.exp);
            }
        }
        if (!replaced) {
            acc[t.mono] += t.coeff;
            continue;
        }
        for (const auto& ft : factor.terms_) {
            acc[ft.mono * rest] += ft.coeff;
        }
    }
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) {
            out.terms_.push_back({m, std::move(c)});
        }
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    return out;
}

MPoly MPoly::substitute(std::string_view name, const MPoly& value) const {
    return substitute(std::map<Var, MPoly>{{Var::named(name), value}});
}

Rational MPoly::evaluate(const std::map<Var, Rational>& values) const {
    Rational total(0);
    for (const auto& t : terms_) {
        Rational term = t.coeff;
        for (const auto& p : t.mono.powers()) {
            const auto it = values.find(p.var);
            if (it == values.end()) {
                throw UnknownVariableError(p.var.name());
            }
            term *= it->second.pow(p.exp);
        }
        total += term;
    }
    return total;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) {
        order.push_back(&t);
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const Term* a, const Term* b) { return display_less(a->mono, b->mono); });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
        const bool negative = t->coeff.sign() < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = negative ? -t->coeff : t->coeff;
        if (t->mono.is_unit()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += t->mono.to_string();
        } else {
            out += mag.to_string();
            out += '*';
            out += t->mono.to_string();
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
    return os << p.to_string();
}

// ---------------------------------------------------------------- division

MPoly exact_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) {
        throw InvariantError("exact division by the zero polynomial");
    }
    if (b.is_constant()) {
        return a * b.constant_term().reciprocal();
    }
    auto cmp = [](const Monomial& x, const Monomial& y) { return grlex_compare(x, y) < 0; };
    std::map<Monomial, Rational, decltype(cmp)> rem(cmp);
    for (const auto& t : a.terms()) {
        rem.emplace(t.mono, t.coeff);
    }
    const Term& lead = b.leading_term();
    const Rational lead_inv = lead.coeff.reciprocal();
    std::vector<Term> quotient;
    Monomial qm;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        if (!top->first.divide(lead.mono, qm)) {
            throw InvariantError("inexact polynomial division: remainder term " + top->first.to_string());
        }
        const Rational qc = top->second * lead_inv;
        for (const auto& bt : b.terms()) {
            Monomial m = qm * bt.mono;
            auto [it, inserted] = rem.try_emplace(std::move(m));
            it->second.sub_product(qc, bt.coeff);
            if (it->second.is_zero()) {
                rem.erase(it);
            }
        }
        quotient.push_back({qm, qc});
    }
    std::reverse(quotient.begin(), quotient.end());
    MPoly q;
    for (auto& t : quotient) {
        q += MPoly::term(t.coeff, t.mono);
    }
    return q.with_universe(a.universe()).with_universe(b.universe());
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    MPoly parse_all() {
        MPoly p = expr();
        skip();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial parse error at " + std::to_string(pos_) + ": " + what + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr() {
        MPoly acc;
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        MPoly t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                MPoly d = factor();
                if (!d.is_constant() || d.is_zero()) {
                    fail("division by a non-constant or zero");
                }
                acc *= d.constant_term().reciprocal();
            } else {
                return acc;
            }
        }
    }

    MPoly factor() {
        MPoly base = primary();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected exponent");
            }
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    MPoly primary() {
        skip();
        if (pos_ >= s_.size()) {
            fail("unexpected end");
        }
        if (accept('(')) {
            MPoly inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        const char c = s_[pos_];
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            return MPoly(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            }
            return MPoly(Var::named(s_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly MPoly::parse(std::string_view text) {
    return Parser(text).parse_all();
}

std::vector<MPoly> indexed_symbols(std::string_view stem, unsigned first, unsigned last) {
    std::vector<MPoly> out;
    for (unsigned i = first; i <= last; ++i) {
        out.emplace_back(Var::indexed(stem, i));
    }
    return out;
}

std::string first_difference(const MPoly& lhs, const MPoly& rhs) {
    const MPoly diff = lhs - rhs;
    if (diff.is_zero()) {
        return {};
    }
    const Monomial& m = diff.terms().front().mono;
    return "coefficient of " + m.to_string() + ": lhs=" + lhs.coefficient(m).to_string() +
           ", rhs=" + rhs.coefficient(m).to_string();
}

} // namespace dlinv
