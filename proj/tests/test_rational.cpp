#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ppl/rational.hpp"

using ppl::GaussianRational;
using ppl::Int;
using ppl::Rational;

namespace {

Rational random_rational(std::mt19937& rng) {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 1000) + 1;
    return {num, den};
}

}

TEST_CASE("construction keeps lowest terms and a positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(10, 4).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 7) / Rational(1, 7) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 2) < Rational(-2));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(7, 5).sign() == 1);
}

TEST_CASE("integer powers, including negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rational::parse("3/7") == Rational(3, 7));
    CHECK(Rational::parse("-3/7") == Rational(-3, 7));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("field laws on random values") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        CHECK(a + b - b == a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("gaussian rationals form a field with i^2 = -1") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.pow(4) == GaussianRational(1));
    CHECK(ppl::imaginary_unit_pow(3) == -i);

    GaussianRational g(Rational(1, 2), Rational(-2, 3));
    CHECK(g.conj() == GaussianRational(Rational(1, 2), Rational(2, 3)));
    CHECK(g.norm() == Rational(1, 4) + Rational(4, 9));
    CHECK(g * g.inverse() == GaussianRational(1));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);

    // multiplication against hand expansion
    GaussianRational a(Rational(2), Rational(3));
    GaussianRational b(Rational(-1), Rational(4));
    CHECK(a * b == GaussianRational(Rational(-14), Rational(5)));

    CHECK(GaussianRational(Rational(5, 3)).is_real());
    CHECK_FALSE(i.is_real());
}

TEST_CASE("gaussian field laws on random values") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        GaussianRational a(random_rational(rng), random_rational(rng));
        GaussianRational b(random_rational(rng), random_rational(rng));
        CHECK(a + b - b == a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((b / a) * a == b);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}
