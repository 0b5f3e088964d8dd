#include "ppl/pseudolog.hpp"

#include <stdexcept>
#include <vector>

namespace ppl {

namespace {

const IntPolynomial& poly_z() {
    static const IntPolynomial z = IntPolynomial::monomial(1, 1);
    return z;
}

const IntPolynomial& poly_one_minus_z() {
    static const IntPolynomial p(std::vector<Int>{1, -1});
    return p;
}

const IntPolynomial& poly_one_plus_z() {
    static const IntPolynomial p(std::vector<Int>{1, 1});
    return p;
}

}

PolyPseudoLog::PolyPseudoLog(std::size_t order, IntPolynomial numerator)
    : order_(order), numerator_(std::move(numerator)) {
    if (numerator_.coeff(0) != 0)
        throw std::invalid_argument("PolyPseudoLog: numerator has nonzero constant term");
    if (numerator_.evaluate(Int(1)) == 0)
        throw std::invalid_argument("PolyPseudoLog: numerator vanishes at z=1 (cancellable pole)");
    int want = order_ == 0 ? 1 : static_cast<int>(order_);
    if (numerator_.degree() != want)
        throw std::invalid_argument("PolyPseudoLog: numerator degree " +
                                    std::to_string(numerator_.degree()) + " does not match order " +
                                    std::to_string(order_));
}

std::string PolyPseudoLog::str() const {
    return "(" + polynomial_str(numerator_) + ") / (1 - z)^" + std::to_string(denominator_exponent());
}

RationalFunction RationalFunction::from(const PolyPseudoLog& f) {
    return {f.numerator(), poly_one_minus_z().pow(f.denominator_exponent())};
}

IntPolynomial euler_numerator_step(const IntPolynomial& numerator, std::size_t den_exp) {
    IntPolynomial inner = numerator.derivative() * poly_one_minus_z() +
                          numerator.scaled(Int(static_cast<long>(den_exp)));
    return poly_z() * inner;
}

PolyPseudoLog euler_operator(const PolyPseudoLog& f) {
    return {f.order() + 1, euler_numerator_step(f.numerator(), f.denominator_exponent())};
}

PolyPseudoLog substitute_reciprocal(const PolyPseudoLog& f) {
    if (f.order() == 0)
        throw std::domain_error("substitute_reciprocal: defined for order >= 1 only");
    // N(1/z) / (1 - 1/z)^(n+1) = (-1)^(n+1) [sum_j a_j z^(n+1-j)] / (1-z)^(n+1)
    std::size_t n = f.order();
    std::vector<Int> v(n + 2, 0);
    for (std::size_t j = 1; j <= n; ++j) v[n + 1 - j] = f.numerator().coeff(j);
    IntPolynomial num(std::move(v));
    if (n % 2 == 0) num = num.scaled(-1);  // (-1)^(n+1)
    return {n, std::move(num)};
}

RationalFunction compose_neg(const PolyPseudoLog& f) {
    std::vector<Int> v(f.numerator().coefficients());
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return {IntPolynomial(std::move(v)), poly_one_plus_z().pow(f.denominator_exponent())};
}

RationalFunction compose_square(const PolyPseudoLog& f) {
    const auto& c = f.numerator().coefficients();
    std::vector<Int> v(c.empty() ? 0 : 2 * c.size() - 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) v[2 * k] = c[k];
    IntPolynomial den = (poly_one_minus_z() * poly_one_plus_z()).pow(f.denominator_exponent());
    return {IntPolynomial(std::move(v)), std::move(den)};
}

RationalPolynomial apply_euler_operator_n(const RationalPolynomial& p, std::size_t n) {
    RationalPolynomial out = p;
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Rational> v(out.coefficients());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] * Rational(static_cast<long>(k));
        out = RationalPolynomial(std::move(v));
    }
    return out;
}

}
