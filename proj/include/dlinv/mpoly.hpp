#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "dlinv/rational.hpp"

namespace dlinv {

/// An indeterminate name: 1-4 lowercase letters with an optional decimal
/// index (`x`, `lam`, `s1`, `a12`). Indexed names are "parameters"; bare
/// names are "main" variables for display purposes. Ordering is
/// alphabetical on the stem, then numeric on the index.
class Var {
public:
    static constexpr unsigned max_index = 4094;

    /// Throws InputError for names outside the grammar.
    static Var named(std::string_view name);
    static Var indexed(std::string_view stem, unsigned index);

    std::string name() const;
    bool has_index() const noexcept { return (key_ & 0xFFFu) != 0; }
    unsigned index() const noexcept { return (key_ & 0xFFFu) - 1; }
    std::uint32_t key() const noexcept { return key_; }

    friend bool operator==(Var a, Var b) noexcept { return a.key_ == b.key_; }
    friend auto operator<=>(Var a, Var b) noexcept { return a.key_ <=> b.key_; }

private:
    explicit Var(std::uint32_t key) : key_(key) {}
    std::uint32_t key_ = 0;
};

struct VarPower {
    Var var;
    std::uint32_t exp;
    friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Power product of indeterminates, stored sparsely in ascending Var order
/// with strictly positive exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t exp = 1);

    std::span<const VarPower> powers() const noexcept { return {powers_.data(), powers_.size()}; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::uint32_t degree_in(Var v) const noexcept;
    bool is_unit() const noexcept { return powers_.empty(); }

    /// Quotient this / d when d divides this; returns false otherwise.
    bool divide(const Monomial& d, Monomial& out) const;
    /// The monomial with `v` removed.
    Monomial without(Var v) const;

    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && a.powers_ == b.powers_;
    }

private:
    friend class MPoly;
    boost::container::small_vector<VarPower, 4> powers_;
    std::uint32_t degree_ = 0;
};

/// Canonical term order: total degree first, then lex (a variable earlier
/// in Var order weighs more). Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b) noexcept;

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial over Rational.
///
/// Terms are kept sorted ascending in grlex order with no zero coefficients.
/// Each value also carries a declared universe of indeterminates (a superset of
/// those occurring); arithmetic merges universes, and `substitute` refuses
/// names outside it.
class MPoly {
public:
    MPoly() = default;
    MPoly(const Rational& c); // NOLINT(google-explicit-constructor)
    MPoly(long c) : MPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)
    MPoly(int c) : MPoly(Rational(static_cast<long>(c))) {} // NOLINT(google-explicit-constructor)
    explicit MPoly(Var v);

    static MPoly var(std::string_view name) { return MPoly(Var::named(name)); }
    static MPoly term(const Rational& c, Monomial m);
    /// Parses the canonical text form (and general +,-,*,/const,^,parentheses).
    static MPoly parse(std::string_view text);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant coefficient (coefficient of the unit monomial).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    /// Highest term in grlex order; polynomial must be nonzero.
    const Term& leading_term() const;

    /// Degree in `v`, or -1 for the zero polynomial.
    int degree(Var v) const noexcept;
    int degree(std::string_view name) const { return degree(Var::named(name)); }
    int total_degree() const noexcept;
    /// Coefficient of v^e viewed as a polynomial in v.
    MPoly coefficient_of(Var v, std::uint32_t e) const;

    /// Declared indeterminates, ascending.
    std::span<const Var> universe() const noexcept;
    /// Indeterminates actually occurring, ascending.
    std::vector<Var> occurring() const;
    bool declares(Var v) const noexcept;
    MPoly with_universe(std::span<const Var> extra) const;
    MPoly with_universe(std::initializer_list<Var> extra) const {
        return with_universe(std::span<const Var>(extra.begin(), extra.size()));
    }

    /// Simultaneous substitution of indeterminates by polynomials.
    /// Throws UnknownVariableError for a name outside the universe.
    MPoly substitute(const std::map<Var, MPoly>& values) const;
    MPoly substitute(std::string_view name, const MPoly& value) const;
    /// Full evaluation at rational values; every occurring variable must be bound.
    Rational evaluate(const std::map<Var, Rational>& values) const;

    MPoly pow(unsigned e) const;

    /// Text form: main variables ascending, parameter part descending.
    std::string to_string() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rational& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
    friend MPoly operator-(MPoly a);
    friend bool operator==(const MPoly& a, const MPoly& b);

    using Universe = std::shared_ptr<const std::vector<Var>>;

private:
    static Universe merge(const Universe& a, const Universe& b);
    void merge_universe(const Universe& other) { universe_ = merge(universe_, other); }

    std::vector<Term> terms_;
    Universe universe_;
};

/// a / b, which must divide exactly; throws InvariantError otherwise.
MPoly exact_divide(const MPoly& a, const MPoly& b);

/// Symbols stem0..stemN (or stem_first..N) as polynomials.
std::vector<MPoly> indexed_symbols(std::string_view stem, unsigned first, unsigned last);

/// Describes the first monomial (in grlex order) where two polynomials differ.
std::string first_difference(const MPoly& lhs, const MPoly& rhs);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

} // namespace dlinv
