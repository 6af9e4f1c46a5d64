#include "dlinv/rational.hpp"

#include <cctype>
#include <ostream>

#include "dlinv/errors.hpp"

namespace dlinv {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw NotInvertibleError("zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class v) : q_(std::move(v)) {
    q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

mpz_class to_mpz(std::string_view s) {
    std::string str(s);
    if (!str.empty() && str[0] == '+') {
        str.erase(0, 1);
    }
    return mpz_class(str, 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer(s, true)) {
            throw InputError("malformed rational literal '" + std::string(text) + "'");
        }
        return Rational(to_mpz(s));
    }
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) {
        throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(to_mpz(num), d));
}

bool Rational::to_int64(std::int64_t& out) const {
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
        return false;
    }
    out = q_.get_num().get_si();
    return true;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw NotInvertibleError("reciprocal of zero");
    }
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        return reciprocal().pow(-e);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw NotInvertibleError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
}

std::string Rational::to_string() const {
    return q_.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace dlinv
