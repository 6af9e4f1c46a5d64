#include <doctest.h>

#include <random>

#include "dlinv/errors.hpp"
#include "dlinv/invert.hpp"
#include "dlinv/verify.hpp"

using dlinv::MPoly;
using dlinv::Rational;

namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

std::vector<Rational> ints(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

// Applies I or its inverse |k| times.
std::vector<Rational> repeat(std::vector<Rational> a, long k) {
    for (long i = 0; i < (k < 0 ? -k : k); ++i) {
        a = k > 0 ? dlinv::invert_transform(a) : dlinv::invert_inverse(a);
    }
    return a;
}

} // namespace

TEST_CASE("sequence parsing") {
    CHECK(dlinv::parse_sequence("1, 2,5/3") == std::vector<Rational>{Rational(1), Rational(2), Rational(5, 3)});
    CHECK_THROWS_AS(dlinv::parse_sequence(""), dlinv::InputError);
    CHECK_THROWS_AS(dlinv::parse_sequence("1,,2"), dlinv::InputError);
}

TEST_CASE("invert transform examples") {
    CHECK(dlinv::invert_transform(ints({1, 1, 1, 1, 1, 1})) == ints({1, 0, 0, 0, 0, 0}));
    CHECK(dlinv::invert_transform(ints({1, 0, 0, 0, 0})) == ints({1, -1, 1, -1, 1}));
    CHECK_THROWS_AS(dlinv::invert_transform(std::vector<Rational>{}), dlinv::InputError);
}

TEST_CASE("defining relation (1 + tA)(1 - tB) = 1 holds symbolically") {
    const auto a = dlinv::symbolic_sequence("a", 6);
    const auto b = dlinv::invert_transform(a);
    std::vector<MPoly> lhs(a.size() + 1, MPoly(0));
    std::vector<MPoly> rhs(a.size() + 1, MPoly(0));
    lhs[0] = rhs[0] = MPoly(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        lhs[i + 1] = a[i];
        rhs[i + 1] = -b[i];
    }
    const auto prod = dlinv::TruncatedSeries<MPoly>("t", lhs) * dlinv::TruncatedSeries<MPoly>("t", rhs);
    CHECK(prod == dlinv::TruncatedSeries<MPoly>::one("t", a.size()));
    CHECK(dlinv::invert_inverse(b) == a);
}

TEST_CASE("iterates match repeated application") {
    dlinv::RandomSource rs(21);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = rs.integers(13, -5, 5);
        CHECK(dlinv::iterate_invert(a, 0) == a);
        CHECK(dlinv::iterate_invert(dlinv::iterate_invert(a, 1), -1) == a);
        for (long k = -3; k <= 3; ++k) {
            CHECK(dlinv::iterate_invert(a, k) == repeat(a, k));
        }
    }
}

TEST_CASE("continuous iterate: displayed values") {
    const auto ix = dlinv::continuous_invert(dlinv::symbolic_sequence("a", 2));
    REQUIRE(ix.size() == 3);
    CHECK(ix[0] == P("a0"));
    CHECK(ix[1] == P("a1 - a0^2*x"));
    CHECK(ix[2] == P("a2 - 2*a0*a1*x + a0^3*x^2"));
    CHECK(ix[2].to_string() == "a2 - 2*a0*a1*x + a0^3*x^2");
}

TEST_CASE("continuous iterate specializes to integer iterates") {
    const auto a = dlinv::symbolic_sequence("a", 5);
    const auto ix = dlinv::continuous_invert(a);
    for (std::size_t n = 0; n < a.size(); ++n) {
        CHECK(ix[n].substitute("x", MPoly(0)) == a[n]);
    }
    dlinv::RandomSource rs(4);
    const auto num = rs.integers(8, -4, 4);
    const auto nix = dlinv::continuous_invert(num);
    for (long k = -3; k <= 3; ++k) {
        const auto ik = dlinv::iterate_invert(num, k);
        for (std::size_t n = 0; n < num.size(); ++n) {
            CHECK(nix[n].substitute("x", MPoly(k)) == MPoly(ik[n]));
        }
    }
}

TEST_CASE("partition closed form for I_n") {
    CHECK(dlinv::formuleI_closed(0) == MPoly(1));
    CHECK(dlinv::formuleI_closed(1) == P("a1 - x"));
    CHECK(dlinv::formuleI_closed(2) == P("a2 - 2*a1*x + x^2"));
    auto a = dlinv::symbolic_sequence("a", 6);
    a[0] = MPoly(1);
    const auto ix = dlinv::continuous_invert(a);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(dlinv::formuleI_closed(n) == ix[n]);
    }
}

TEST_CASE("group law, Toeplitz recovery, homogeneity") {
    CHECK(dlinv::group_law_check(2).ok);
    CHECK(dlinv::group_law_check(4).ok);
    CHECK(dlinv::homogeneity_check(0).ok);
    CHECK(dlinv::homogeneity_check(1).ok);
    CHECK(dlinv::homogeneity_check(2).ok);
    CHECK(dlinv::homogeneity_check(5).ok);

    const auto a = dlinv::symbolic_sequence("a", 4);
    const auto b = dlinv::invert_transform(a);
    for (std::size_t n = 0; n < a.size(); ++n) {
        CHECK(dlinv::toeplitz_recover(b, n) == a[n]);
    }
    const auto bs = dlinv::symbolic_sequence("b", 2);
    CHECK(dlinv::toeplitz_recover(bs, 0) == P("b0"));
    CHECK(dlinv::toeplitz_recover(bs, 1) == P("b0^2 + b1"));
    CHECK(dlinv::toeplitz_recover(bs, 2) == P("b0^3 + 2*b0*b1 + b2"));
    CHECK_THROWS_AS(dlinv::toeplitz_recover(bs, 3), dlinv::InputError);
}
