#include <doctest.h>

#include <random>

#include "dlinv/errors.hpp"
#include "dlinv/rational.hpp"

using dlinv::Rational;

TEST_CASE("parse and print") {
    CHECK(Rational::parse("5/3").to_string() == "5/3");
    CHECK(Rational::parse("-6/4").to_string() == "-3/2");
    CHECK(Rational::parse(" 7 ").to_string() == "7");
    CHECK(Rational::parse("+2").to_string() == "2");
    CHECK(Rational::parse("0/5").to_string() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), dlinv::InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), dlinv::InputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), dlinv::InputError);
    CHECK_THROWS_AS(Rational::parse(""), dlinv::InputError);
}

TEST_CASE("reduced form with positive denominator") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), dlinv::NotInvertibleError);
    CHECK_THROWS_AS(Rational(0).reciprocal(), dlinv::NotInvertibleError);
}

TEST_CASE("powers and factorial") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(dlinv::factorial(0) == Rational(1));
    CHECK(dlinv::factorial(6) == Rational(720));
}

TEST_CASE("field laws on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    auto reduced = [](const Rational& r) {
        return gcd(r.numerator(), r.denominator()) == 1 && r.denominator() > 0;
    };
    for (int i = 0; i < 200; ++i) {
        const Rational a = draw();
        const Rational b = draw();
        const Rational c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(reduced(a * b - c));
        CHECK(reduced(a + b * c));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(reduced(a / b));
        }
    }
}

TEST_CASE("fused multiply-add helpers") {
    Rational acc(1, 2);
    acc.add_product(Rational(2, 3), Rational(3, 4));
    CHECK(acc == Rational(1));
    acc.sub_product(Rational(1), Rational(1));
    CHECK(acc.is_zero());
}
