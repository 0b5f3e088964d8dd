#ifndef PPL_PSEUDOLOG_HPP
#define PPL_PSEUDOLOG_HPP

#include <cstddef>
#include <string>

#include "ppl/polynomial.hpp"

namespace ppl {

/// Li_{-n}(z) in canonical form N(z)/(1-z)^(n+1).
///
/// The denominator is always the literal power (1-z)^(order+1), never
/// expanded against the numerator, so two constructions agree exactly when
/// their orders and integer numerator coefficients agree.  Construction
/// enforces the canonical-form invariants:
///   - N(0) = 0 (every polypseudolog is divisible by z),
///   - N(1) != 0 (no cancellable factor of 1-z),
///   - deg N = order for order >= 1, and deg N = 1 for order 0.
class PolyPseudoLog {
public:
    PolyPseudoLog(std::size_t order, IntPolynomial numerator);

    std::size_t order() const { return order_; }
    const IntPolynomial& numerator() const { return numerator_; }
    std::size_t denominator_exponent() const { return order_ + 1; }

    /// Same order, numerator scaled by a nonzero integer.
    PolyPseudoLog scaled(const Int& c) const { return {order_, numerator_.scaled(c)}; }

    friend bool operator==(const PolyPseudoLog& a, const PolyPseudoLog& b) {
        return a.order_ == b.order_ && a.numerator_ == b.numerator_;
    }
    friend bool operator!=(const PolyPseudoLog& a, const PolyPseudoLog& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t order_;
    IntPolynomial numerator_;
};

/// Unreduced rational function used to state substitution identities as
/// exact polynomial equalities after clearing denominators.
struct RationalFunction {
    IntPolynomial num;
    IntPolynomial den;

    static RationalFunction from(const PolyPseudoLog& f);

    RationalFunction operator+(const RationalFunction& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }
    RationalFunction scaled(const Int& c) const { return {num.scaled(c), den}; }

    /// Cross-multiplied equality; no normalization is ever needed.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
};

/// One step of z d/dz on a numerator over (1-z)^den_exp:
/// N/(1-z)^e  ->  z (N'(z)(1-z) + e N(z)) / (1-z)^(e+1).
IntPolynomial euler_numerator_step(const IntPolynomial& numerator, std::size_t den_exp);

/// z d/dz, raising the order by one.
PolyPseudoLog euler_operator(const PolyPseudoLog& f);

/// Canonical form of f(1/z); defined for order >= 1 only (the inversion
/// identity it verifies does not extend to order 0).
PolyPseudoLog substitute_reciprocal(const PolyPseudoLog& f);

/// f(-z) = N(-z)/(1+z)^(n+1), held unreduced for exact identity testing.
RationalFunction compose_neg(const PolyPseudoLog& f);

/// f(z^2) = N(z^2)/((1-z)(1+z))^(n+1), held unreduced.
RationalFunction compose_square(const PolyPseudoLog& f);

/// (z d/dz)^n applied to a polynomial by n-fold direct application; each
/// application maps the coefficient of z^k to k times itself.
RationalPolynomial apply_euler_operator_n(const RationalPolynomial& p, std::size_t n);

}

#endif
