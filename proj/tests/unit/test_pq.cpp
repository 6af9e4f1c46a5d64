#include <doctest.h>

#include <thread>

#include "dlinv/errors.hpp"
#include "dlinv/pq.hpp"
#include "dlinv/series.hpp"
#include "dlinv/verify.hpp"

using dlinv::MPoly;
using dlinv::PQContext;
using dlinv::Rational;

namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

} // namespace

TEST_CASE("P polynomials") {
    const auto ctx = PQContext::symbolic(4);
    CHECK(dlinv::p_sequence(ctx, 0) == MPoly(1));
    CHECK(dlinv::p_sequence(ctx, 1) == P("1 + s1*x"));
    CHECK(dlinv::p_sequence(ctx, 2) == P("1 + 2*s1*x + (s1^2 + s2)*x^2"));
    CHECK(dlinv::p_sequence(ctx, 2).to_string() == "1 + 2*s1*x + s1^2*x^2 + s2*x^2");
    CHECK(dlinv::p_sequence(ctx, 3) == P("1 + 3*s1*x + (3*s1^2 + 2*s2)*x^2 + (s1^3 + 3*s1*s2 + s3)*x^3"));
    CHECK_THROWS_AS(dlinv::p_sequence(ctx, 5), dlinv::PrecisionError);
}

TEST_CASE("P recursion against an independent series product") {
    const auto ctx = PQContext::symbolic(6);
    const auto& s = ctx.source();
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<MPoly> prev = ctx.p_coefficients(n - 1);
        prev.resize(n + 1, MPoly(0));
        const dlinv::TruncatedSeries<MPoly> lhs("x", prev);
        const dlinv::TruncatedSeries<MPoly> rhs("x", std::vector<MPoly>(s.begin(), s.begin() + n + 1));
        CHECK((lhs * rhs).coeffs() == ctx.p_coefficients(n));
    }
}

TEST_CASE("Q polynomials") {
    const auto ctx = PQContext::symbolic(3);
    CHECK(dlinv::q_sequence(ctx, 0) == MPoly(1));
    CHECK(dlinv::q_sequence(ctx, 1) == P("x + s1"));
    CHECK(dlinv::q_sequence(ctx, 2) == P("x^2 + 2*s1*x + s1^2 + s2"));
}

TEST_CASE("numeric sources") {
    const auto ones = PQContext::numeric({Rational(1)}, 3);
    for (unsigned n = 0; n <= 3; ++n) {
        CHECK(dlinv::p_sequence(ones, n) == MPoly(1));
    }
    const auto geo = PQContext::numeric({Rational(1), Rational(1), Rational(1)}, 3);
    CHECK(dlinv::p_sequence(geo, 2) == P("1 + 2*x + 2*x^2"));
    CHECK_THROWS_AS(PQContext::numeric({Rational(2)}, 3), dlinv::InputError);
}

TEST_CASE("closed form equals the recursion") {
    const auto ctx = PQContext::symbolic(6);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(dlinv::formuleP_closed(ctx, n) == dlinv::p_sequence(ctx, n));
    }
}

TEST_CASE("functional equation and its link with the continuous iterate") {
    CHECK(dlinv::verify_thmA(PQContext::symbolic(2), 2).ok);
    CHECK(dlinv::verify_thmA(PQContext::symbolic(5), 5).ok);
    CHECK(dlinv::qx_invert_link(PQContext::symbolic(2), 2).ok);
    dlinv::RandomSource rs(8);
    for (int trial = 0; trial < 5; ++trial) {
        auto s = rs.rationals(7);
        s[0] = Rational(1);
        const auto ctx = PQContext::numeric(s, 8);
        CHECK(dlinv::verify_thmA(ctx, 8).ok);
        CHECK(dlinv::qx_invert_link(ctx, 6).ok);
    }
}

TEST_CASE("a context can be shared across threads") {
    const auto ctx = PQContext::symbolic(7);
    std::vector<MPoly> results(4);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < results.size(); ++i) {
        pool.emplace_back([&, i] { results[i] = dlinv::p_sequence(ctx, 7); });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& r : results) {
        CHECK(r == dlinv::formuleP_closed(ctx, 7));
    }
}
