#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppl/combinatorics.hpp"
#include "ppl/construct.hpp"

using ppl::canonical;
using ppl::construct;
using ppl::ConstructionMethod;
using ppl::DoubleSumVariant;
using ppl::eval_double_sum;
using ppl::eval_exact;
using ppl::eval_series_oracle;
using ppl::GFKernel;
using ppl::gf_taylor;
using ppl::Int;
using ppl::IntPolynomial;
using ppl::Rational;

TEST_CASE("canonical forms match the printed list") {
    CHECK(canonical(0).numerator() == IntPolynomial(std::vector<Int>{0, 1}));
    CHECK(canonical(0).denominator_exponent() == 1);
    CHECK(canonical(5).numerator() == IntPolynomial(std::vector<Int>{0, 1, 26, 66, 26, 1}));
    CHECK(canonical(7).numerator() ==
          IntPolynomial(std::vector<Int>{0, 1, 120, 1191, 2416, 1191, 120, 1}));
}

TEST_CASE("single-order spot checks of each construction route") {
    // tangent closed form at order 1 reduces to (w^2 - 1)/4 = z/(1-z)^2
    CHECK(construct(ConstructionMethod::TangentClosedForm, 1) == canonical(1));
    // third Stirling form at order 1: -S(2,1)/(1-z) + S(2,2)/(1-z)^2
    CHECK(construct(ConstructionMethod::StirlingC, 1) == canonical(1));
    // operator route at order 8 hits the printed row
    CHECK(construct(ConstructionMethod::Operator, 8).numerator() ==
          IntPolynomial(std::vector<Int>{0, 1, 247, 4293, 15619, 15619, 4293, 247, 1}));
    // the gaussian route at order 2, (i/2)^3 P_2(-i w) with P_2 = 2x + 2x^3
    CHECK(construct(ConstructionMethod::DerivativePolynomial, 2) == canonical(2));
}

TEST_CASE("every construction route reduces to the canonical form") {
    for (std::size_t n = 1; n <= 16; ++n)
        for (ConstructionMethod m : ppl::kAllConstructionMethods)
            CHECK(construct(m, n) == canonical(n));
}

TEST_CASE("order zero is rejected by the closed forms") {
    for (ConstructionMethod m : ppl::kAllConstructionMethods)
        CHECK_THROWS_AS(construct(m, 0), std::invalid_argument);
}

TEST_CASE("exact evaluation") {
    CHECK(eval_exact(2, Rational(1, 2)) == Rational(6));
    CHECK(eval_exact(0, Rational(1, 2)) == Rational(1));
    CHECK(eval_exact(1, Rational(-1)) == Rational(-1, 4));
    CHECK(eval_exact(3, Rational(1, 3)) == Rational(33, 8));
    CHECK_THROWS_AS(eval_exact(3, Rational(1)), ppl::PoleAtUnity);
}

TEST_CASE("double sums evaluate to the same values") {
    CHECK(eval_double_sum(DoubleSumVariant::A, 2, Rational(1, 2)) == Rational(6));
    CHECK(eval_double_sum(DoubleSumVariant::C, 1, Rational(-1)) == Rational(-1, 4));
    CHECK(eval_double_sum(DoubleSumVariant::B, 3, Rational(1, 3)) == eval_exact(3, Rational(1, 3)));
    CHECK_THROWS_AS(eval_double_sum(DoubleSumVariant::A, 2, Rational(1)), ppl::PoleAtUnity);
    CHECK_THROWS_AS(eval_double_sum(DoubleSumVariant::B, 0, Rational(1, 2)), std::invalid_argument);

    const std::vector<Rational> points = {Rational(1, 2), Rational(-1, 3), Rational(3),
                                          Rational(-7, 5)};
    for (std::size_t n = 1; n <= 12; ++n)
        for (const Rational& z : points) {
            Rational expected = eval_exact(n, z);
            CHECK(eval_double_sum(DoubleSumVariant::A, n, z) == expected);
            CHECK(eval_double_sum(DoubleSumVariant::B, n, z) == expected);
            CHECK(eval_double_sum(DoubleSumVariant::C, n, z) == expected);
        }
}

TEST_CASE("series partial sums") {
    CHECK(eval_series_oracle(0, Rational(1, 2), 10) == Rational(1023, 1024));
    CHECK(eval_series_oracle(1, Rational(1, 2), 2) == Rational(1));
    // 200 terms of sum k^2/2^k sit within 10^-30 of the exact value 6
    Rational err = (eval_series_oracle(2, Rational(1, 2), 200) - Rational(6)).abs();
    CHECK(err < Rational(Int(1), ppl::ipow(Int(10), 30)));
    CHECK_THROWS_AS(eval_series_oracle(2, Rational(1), 5), std::domain_error);
    CHECK_THROWS_AS(eval_series_oracle(2, Rational(-3, 2), 5), std::domain_error);
    CHECK_THROWS_AS(eval_series_oracle(2, Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("values at -1 through the bernoulli connection") {
    CHECK(ppl::special_value_neg1(1) == Rational(-1, 4));
    CHECK(ppl::special_value_neg1(2) == Rational(0));
    CHECK(ppl::special_value_neg1(3) == Rational(1, 8));
    for (std::size_t n = 1; n <= 20; ++n) {
        CHECK(ppl::special_value_neg1(n) == eval_exact(n, Rational(-1)));
        if (n % 2 == 0) CHECK(ppl::special_value_neg1(n) == Rational(0));
    }
}

TEST_CASE("generating-function kernels reproduce the evaluations") {
    // constant terms first
    CHECK(gf_taylor(GFKernel::Kb, Rational(1, 2), 0)[0] == Rational(1));
    CHECK(gf_taylor(GFKernel::Ka, Rational(1, 3), 2)[0] == Rational(3, 2));

    // 2! c_2 of 1/(1 - z e^t) at z = 1/2 is Li_{-2}(1/2) = 6
    auto ka = gf_taylor(GFKernel::Ka, Rational(1, 2), 2);
    CHECK(ka[2] * Rational(2) == Rational(6));

    // c_1 of the symmetric kernel at 1/3 is Li_{-1}(1/3) = 3/4
    auto kd = gf_taylor(GFKernel::Kd, Rational(1, 3), 1);
    CHECK(kd[1] == Rational(3, 4));

    for (const Rational& z : {Rational(1, 3), Rational(-2, 5)}) {
        const std::size_t order = 12;
        Rational li0 = eval_exact(0, z);
        auto a = gf_taylor(GFKernel::Ka, z, order);
        auto b = gf_taylor(GFKernel::Kb, z, order);
        auto c = gf_taylor(GFKernel::Kc, z, order);
        auto d = gf_taylor(GFKernel::Kd, z, order);
        auto p = gf_taylor(GFKernel::KP, z, order);
        CHECK(a[0] == Rational(1) + li0);
        CHECK(b[0] == li0);
        CHECK(c[0] == Rational(1) + li0);
        CHECK(d[0] == Rational(1, 2) + li0);
        Rational nfac(1);
        for (std::size_t n = 1; n <= order; ++n) {
            nfac *= Rational(static_cast<long>(n));
            Rational li = eval_exact(n, z);
            Rational sign_li = n % 2 == 0 ? li : -li;
            CHECK(a[n] * nfac == li);
            CHECK(b[n] * nfac == sign_li);
            CHECK(c[n] * nfac == sign_li);
            CHECK(d[n] * nfac == li);
            CHECK(p[n] * nfac == li);
        }
    }
    CHECK_THROWS_AS(gf_taylor(GFKernel::Ka, Rational(1), 4), ppl::PoleAtUnity);
}

TEST_CASE("numerator structure: divisibility and palindromy") {
    static const IntPolynomial one_plus_z(std::vector<Int>{1, 1});
    for (std::size_t n = 0; n <= 14; ++n) {
        IntPolynomial num = canonical(n).numerator();
        CHECK(num.coeff(0) == 0);
        if (n >= 2 && n % 2 == 0) CHECK(num.is_divisible_by(one_plus_z));
        for (std::size_t j = 1; j <= n; ++j) CHECK(num.coeff(j) == num.coeff(n + 1 - j));
    }
    // order 0 is the stated exception to the even-order 1+z rule
    CHECK_FALSE(canonical(0).numerator().is_divisible_by(one_plus_z));
}
