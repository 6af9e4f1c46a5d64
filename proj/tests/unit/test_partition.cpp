#include <doctest.h>

#include <algorithm>

#include "dlinv/errors.hpp"
#include "dlinv/partition.hpp"
#include "oracles.hpp"

using dlinv::MPoly;
using dlinv::Partition;
using dlinv::Rational;

namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

} // namespace

TEST_CASE("partition counts against brute force") {
    REQUIRE(dlinv::partitions(0).size() == 1);
    CHECK(dlinv::partitions(0)[0].empty());
    CHECK(dlinv::partitions(4).size() == oracle::partition_count_bruteforce(4));
    CHECK(dlinv::partitions(4).size() == 5);
    CHECK(dlinv::partitions(6).size() == 11);
    for (unsigned m = 0; m <= 12; ++m) {
        CHECK(dlinv::partitions(m).size() == oracle::partition_count_bruteforce(m));
    }
}

TEST_CASE("partitions are distinct, of the right weight, in descending lex order") {
    for (unsigned m = 1; m <= 9; ++m) {
        const auto& ps = dlinv::partitions(m);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].weight() == m);
            if (i > 0) {
                // compare padded multiplicity vectors
                auto a = ps[i - 1].multiplicities();
                auto b = ps[i].multiplicities();
                a.resize(m, 0);
                b.resize(m, 0);
                CHECK(std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()));
            }
        }
    }
}

TEST_CASE("parse and print") {
    const Partition p = Partition::parse("1^2.3^1");
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.multiplicity(2) == 0);
    CHECK(p.multiplicity(3) == 1);
    CHECK(p.weight() == 5);
    CHECK(p.part_count() == 3);
    CHECK(p.largest_part() == 3);
    CHECK(p.to_string() == "1^2.3^1");
    CHECK(Partition::parse("()").empty());
    CHECK(Partition::parse("3") == Partition({0, 0, 1}));
    CHECK(p.remove_part(3) == Partition({2}));
    CHECK(p.multiplicity_factorials() == Rational(2));
    CHECK_THROWS_AS(Partition::parse("1^"), dlinv::InputError);
    CHECK_THROWS_AS(Partition::parse("0^2"), dlinv::InputError);
}

TEST_CASE("extended multinomial") {
    CHECK(dlinv::multinomial_ext(Rational(7), Partition()) == Rational(1));
    CHECK(dlinv::multinomial_ext(Rational(3), Partition({1, 1})) == Rational(6));
    CHECK(dlinv::multinomial_ext(Rational(1), Partition({2})) == Rational(0));
    CHECK(dlinv::multinomial_ext(P("n"), Partition({2})) == P("n*(n-1)/2"));
}

TEST_CASE("multinomials are integers at naturals and match the factorial formula") {
    for (unsigned m = 1; m <= 7; ++m) {
        for (const auto& nu : dlinv::partitions(m)) {
            for (long n = 0; n <= 9; ++n) {
                const Rational value = dlinv::multinomial_ext(Rational(n), nu);
                CHECK(value.is_integer());
                const long p = nu.part_count();
                const Rational expect = n < p ? Rational(0)
                                              : dlinv::factorial(n) /
                                                    (dlinv::factorial(n - p) * nu.multiplicity_factorials());
                CHECK(value == expect);
                CHECK(dlinv::multinomial_ext(P("n"), nu).substitute("n", MPoly(n)) == MPoly(value));
            }
        }
    }
}

TEST_CASE("partition power") {
    const std::vector<MPoly> base{MPoly(0), P("s1"), P("s2"), P("s3")};
    CHECK(dlinv::partition_power(base, Partition::parse("1^2.3")) == P("s1^2*s3"));
    CHECK(dlinv::partition_power(base, Partition()) == MPoly(1));
}

TEST_CASE("R polynomials") {
    CHECK(dlinv::r_poly(Partition()) == MPoly(1));
    CHECK(dlinv::r_poly(Partition({1})) == P("x"));
    CHECK(dlinv::r_poly(Partition({0, 1})) == P("x - 1"));
    CHECK(dlinv::r_poly(Partition({2})) == P("x*(x-1)/2"));
    CHECK(dlinv::r_poly(Partition({2})).substitute("x", P("x+1")) == P("(x+1)*x/2"));
}

TEST_CASE("R difference identity") {
    CHECK(dlinv::r_difference_check(Partition({0, 1})));
    CHECK(dlinv::r_difference_check(Partition({2})));
    CHECK(dlinv::r_difference_check(Partition()));
    std::size_t checked = 0;
    for (unsigned m = 0; m <= 6; ++m) {
        for (const auto& nu : dlinv::partitions(m)) {
            CHECK(dlinv::r_difference_check(nu));
            ++checked;
        }
    }
    CHECK(checked == 30);
}

TEST_CASE("R polynomials of 1^k share the root k-1") {
    for (unsigned k = 1; k <= 6; ++k) {
        const MPoly r = dlinv::r_poly(Partition({k}));
        CHECK(r.substitute("x", MPoly(static_cast<long>(k) - 1)).is_zero());
    }
}
