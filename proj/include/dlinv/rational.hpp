#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dlinv {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& v) : q_(v) {}
    explicit Rational(mpq_class v);

    /// Parses `p` or `p/q` with optional sign; throws InputError.
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    /// Lossless conversion when the value is an integer fitting in int64.
    bool to_int64(std::int64_t& out) const;

    Rational reciprocal() const;
    Rational pow(long e) const;

    std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);
    /// *this += a*b without a temporary Rational.
    void add_product(const Rational& a, const Rational& b);
    void sub_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned n);

} // namespace dlinv
