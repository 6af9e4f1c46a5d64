#include <doctest.h>

#include <cstdlib>

#include "dlinv/errors.hpp"
#include "dlinv/hankel.hpp"
#include "dlinv/verify.hpp"
#include "oracles.hpp"

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

} // namespace

TEST_CASE("Hankel matrices") {
    const auto s = ints({1, 1, 2, 5});
    CHECK(dlinv::hankel_matrix(s, 1)(0, 0) == Rational(1));
    const auto m = dlinv::hankel_matrix(s, 2);
    CHECK(m(1, 1) == Rational(2));
    CHECK(dlinv::det(m) == Rational(1));
    const auto m1 = dlinv::hankel_matrix(s, 2, 1);
    CHECK(m1(0, 0) == Rational(1));
    CHECK(m1(1, 1) == Rational(5));
    CHECK(dlinv::det(m1) == Rational(1));
    CHECK_THROWS_AS(dlinv::hankel_matrix(s, 3), dlinv::InputError);
}

TEST_CASE("Hankel transforms") {
    const auto catalan = ints({1, 1, 2, 5, 14, 42});
    CHECK(dlinv::hankel_transform(catalan, 1) == ints({1}));
    CHECK(dlinv::hankel_transform(catalan, 3) == ints({1, 1, 1}));
    for (std::size_t n = 1; n <= 3; ++n) {
        CHECK(dlinv::det(dlinv::hankel_matrix(catalan, n)) == oracle::cofactor_det(dlinv::hankel_matrix(catalan, n)));
    }
    const auto sym = dlinv::symbolic_sequence("s", 2);
    CHECK(dlinv::hankel_transform(sym, 2) == std::vector<MPoly>{P("s0"), P("s0*s2 - s1^2")});
    CHECK_THROWS_AS(dlinv::hankel_transform(ints({1, 1}), 2), dlinv::InputError);
}

TEST_CASE("Layman invariance") {
    // (1,1,1) has transform [1, 0]; so does I(a) = (1,0,0)
    const auto ones = ints({1, 1, 1, 1, 1});
    CHECK(dlinv::hankel_transform(ones, 2) == ints({1, 0}));
    CHECK(dlinv::hankel_transform(dlinv::invert_transform(ones), 2) == ints({1, 0}));
    CHECK(dlinv::layman_check(ones, 2).ok);
    CHECK(dlinv::layman_check(ones, 1).ok);
    dlinv::RandomSource rs(31);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(dlinv::layman_check(rs.integers(11, -5, 5), 6).ok);
    }
    CHECK(dlinv::layman_check(dlinv::symbolic_sequence("a", 4), 3).ok);
}

TEST_CASE("continuous Layman") {
    CHECK(dlinv::continuous_layman_check(dlinv::symbolic_sequence("a", 0), 1).ok);
    CHECK(dlinv::continuous_layman_check(dlinv::symbolic_sequence("a", 4), 3).ok);
    dlinv::RandomSource rs(2);
    CHECK(dlinv::continuous_layman_check(rs.integers(9, -5, 5), 5).ok);
}

TEST_CASE("size budget") {
    dlinv::SizeBudget b;
    CHECK_NOTHROW(b.require(5, true));
    CHECK_THROWS_AS(b.require(6, true), dlinv::ResourceError);
    CHECK_NOTHROW(b.require(8, false));
    CHECK_THROWS_AS(b.require(9, false), dlinv::ResourceError);
    ::setenv("DLINV_SYMBOLIC_NMAX", "2", 1);
    CHECK(dlinv::SizeBudget::from_env().symbolic_nmax == 2);
    ::unsetenv("DLINV_SYMBOLIC_NMAX");
    CHECK(dlinv::SizeBudget::from_env().symbolic_nmax == 5);
}

TEST_CASE("conjecture reports") {
    const auto a = dlinv::symbolic_sequence("a", 8);
    const auto reports = dlinv::conjecture_i_report(a, 2, 3);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CHECK(r.bound == static_cast<int>(r.shift));
        CHECK(r.rows.size() == 3);
        for (const auto& row : r.rows) {
            CHECK(row.degree <= r.bound);
            CHECK(row.ok);
        }
    }
    for (const auto& row : reports[0].rows) {
        CHECK(row.degree == 0);
    }

    const auto ctx = dlinv::PQContext::symbolic(4);
    const auto ii = dlinv::conjecture_ii_report(ctx, 3);
    REQUIRE(ii.rows.size() == 3);
    CHECK(ii.measured_var == "s1");
    CHECK(ii.rows[0].det == MPoly(1));
    CHECK(ii.rows[1].det == P("s2"));
    // the 2x2 determinant by hand: Q0*Q2 - Q1^2
    const MPoly q1 = dlinv::q_sequence(ctx, 1);
    CHECK(dlinv::q_sequence(ctx, 0) * dlinv::q_sequence(ctx, 2) - q1 * q1 == P("s2"));
    for (const auto& row : ii.rows) {
        CHECK(row.ok);
        CHECK(row.degree == 0);
    }
    CHECK_THROWS_AS(dlinv::conjecture_ii_report(dlinv::PQContext::symbolic(12), 7), dlinv::ResourceError);
}
