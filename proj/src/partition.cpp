#include "dlinv/partition.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "dlinv/errors.hpp"

namespace dlinv {

Partition::Partition(std::vector<unsigned> mult) : mult_(std::move(mult)) {
    while (!mult_.empty() && mult_.back() == 0) {
        mult_.pop_back();
    }
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        weight_ += static_cast<unsigned>(j + 1) * mult_[j];
        part_count_ += mult_[j];
    }
}

Partition Partition::parse(std::string_view text) {
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto number = [&](std::string_view s) -> unsigned {
        s = trimmed(s);
        if (s.empty() || s.size() > 6) {
            throw InputError("malformed partition '" + std::string(text) + "'");
        }
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InputError("malformed partition '" + std::string(text) + "'");
            }
        }
        return static_cast<unsigned>(std::stoul(std::string(s)));
    };
    const std::string_view s = trimmed(text);
    if (s == "()" || s.empty()) {
        return Partition();
    }
    std::vector<unsigned> mult;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t dot = s.find('.', start);
        const std::string_view piece = s.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        const std::size_t caret = piece.find('^');
        const unsigned part = number(piece.substr(0, caret));
        const unsigned count = caret == std::string_view::npos ? 1 : number(piece.substr(caret + 1));
        if (part == 0) {
            throw InputError("partition parts must be positive in '" + std::string(text) + "'");
        }
        if (mult.size() < part) {
            mult.resize(part, 0);
        }
        mult[part - 1] += count;
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
    }
    return Partition(std::move(mult));
}

Partition Partition::remove_part(unsigned part) const {
    if (multiplicity(part) == 0) {
        throw InputError("partition " + to_string() + " has no part " + std::to_string(part));
    }
    std::vector<unsigned> m = mult_;
    --m[part - 1];
    return Partition(std::move(m));
}

Rational Partition::multiplicity_factorials() const {
    Rational acc(1);
    for (unsigned m : mult_) {
        acc *= factorial(m);
    }
    return acc;
}

std::string Partition::to_string() const {
    if (mult_.empty()) {
        return "()";
    }
    std::string out;
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        if (mult_[j] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '.';
        }
        out += std::to_string(j + 1) + "^" + std::to_string(mult_[j]);
    }
    return out;
}

namespace {

// Multiplicities are chosen for part 1 first, largest count first, which
// yields descending lexicographic order on the multiplicity vectors.
void enumerate(unsigned remaining, unsigned part, unsigned max_part, std::vector<unsigned>& mult,
               std::vector<Partition>& out) {
    if (part > max_part) {
        if (remaining == 0) {
            out.emplace_back(mult);
        }
        return;
    }
    for (unsigned count = remaining / part + 1; count-- > 0;) {
        mult[part - 1] = count;
        enumerate(remaining - count * part, part + 1, max_part, mult, out);
    }
    mult[part - 1] = 0;
}

} // namespace

const std::vector<Partition>& partitions(unsigned m) {
    static std::shared_mutex mutex;
    static std::map<unsigned, std::unique_ptr<const std::vector<Partition>>> memo;
    {
        std::shared_lock lock(mutex);
        if (const auto it = memo.find(m); it != memo.end()) {
            return *it->second;
        }
    }
    auto list = std::make_unique<std::vector<Partition>>();
    if (m == 0) {
        list->emplace_back();
    } else {
        std::vector<unsigned> mult(m, 0);
        enumerate(m, 1, m, mult, *list);
    }
    std::unique_lock lock(mutex);
    const auto [it, inserted] = memo.try_emplace(m, std::move(list));
    return *it->second;
}

Rational multinomial_ext(const Rational& n, const Partition& nu) {
    Rational acc(1);
    for (unsigned i = 0; i < nu.part_count(); ++i) {
        acc *= n - Rational(static_cast<long>(i));
    }
    return acc / nu.multiplicity_factorials();
}

MPoly multinomial_ext(const MPoly& n, const Partition& nu) {
    MPoly acc(1);
    for (unsigned i = 0; i < nu.part_count(); ++i) {
        acc *= n - MPoly(static_cast<long>(i));
    }
    acc *= nu.multiplicity_factorials().reciprocal();
    return acc.with_universe(n.universe());
}

MPoly partition_power(const std::vector<MPoly>& base, const Partition& nu) {
    MPoly acc(1);
    for (unsigned j = 1; j <= nu.largest_part(); ++j) {
        const unsigned e = nu.multiplicity(j);
        if (e == 0) {
            continue;
        }
        if (j >= base.size()) {
            throw PrecisionError("no value supplied for parts of size " + std::to_string(j));
        }
        acc *= base[j].pow(e);
    }
    return acc;
}

MPoly r_poly(const Partition& nu, std::string_view var) {
    const MPoly x = MPoly::var(var);
    if (nu.empty()) {
        return MPoly(1).with_universe(x.universe());
    }
    const unsigned p = nu.part_count();
    MPoly out = (x + MPoly(1L - static_cast<long>(nu.weight()))) * binomial_poly(x, p - 1);
    out *= factorial(p - 1) / nu.multiplicity_factorials();
    return out;
}

bool r_difference_check(const Partition& nu) {
    const MPoly x = MPoly::var("x");
    const MPoly r = r_poly(nu);
    const MPoly lhs = r.substitute("x", x + MPoly(1)) - r;
    MPoly rhs(0);
    for (unsigned j = 1; j <= nu.largest_part(); ++j) {
        if (nu.multiplicity(j) > 0) {
            rhs += r_poly(nu.remove_part(j));
        }
    }
    return lhs == rhs;
}

} // namespace dlinv
