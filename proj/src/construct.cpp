#include "ppl/construct.hpp"

#include <stdexcept>
#include <utility>

#include "ppl/combinatorics.hpp"
#include "ppl/series.hpp"

namespace ppl {

namespace {

const IntPolynomial& poly_one_minus_z() {
    static const IntPolynomial p(std::vector<Int>{1, -1});
    return p;
}

const IntPolynomial& poly_one_plus_z() {
    static const IntPolynomial p(std::vector<Int>{1, 1});
    return p;
}

void require_positive_order(std::size_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": requires order n >= 1");
}

void require_not_pole(const Rational& z) {
    if (z == Rational(1)) throw PoleAtUnity("Li_{-n} has a pole of order n+1 at z = 1");
}

/// Reduces sum_k q_k w^k with w = (1+z)/(1-z) to the numerator over
/// (1-z)^den_exp:  sum_k q_k (1+z)^k (1-z)^(den_exp - k).
template <typename T>
Polynomial<T> substitute_w(const std::vector<T>& q, std::size_t den_exp) {
    Polynomial<T> one_minus(std::vector<T>{T(1), T(-1)});
    Polynomial<T> one_plus(std::vector<T>{T(1), T(1)});
    Polynomial<T> acc;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] == T(0)) continue;
        if (k > den_exp) throw std::logic_error("substitute_w: w-degree exceeds denominator power");
        acc += (one_plus.pow(k) * one_minus.pow(den_exp - k)).scaled(q[k]);
    }
    return acc;
}

PolyPseudoLog construct_operator(std::size_t n) {
    // n-fold z d/dz starting from 1/(1-z) (numerator 1 over (1-z)^1)
    IntPolynomial num(Int(1));
    for (std::size_t e = 1; e <= n; ++e) num = euler_numerator_step(num, e);
    return {n, std::move(num)};
}

PolyPseudoLog construct_stirling_a(std::size_t n) {
    IntPolynomial acc;
    for (std::size_t k = 1; k <= n; ++k) {
        Int c = factorial(k) * stirling2(n, k);
        acc += (IntPolynomial::monomial(c, k) * poly_one_minus_z().pow(n - k));
    }
    return {n, std::move(acc)};
}

PolyPseudoLog construct_stirling_b(std::size_t n) {
    IntPolynomial acc;
    for (std::size_t k = 1; k <= n; ++k) {
        Int c = factorial(k) * stirling2(n, k);
        if (parity_sign(static_cast<long>(n + k)) < 0) c = -c;
        acc += (IntPolynomial::monomial(c, 1) * poly_one_minus_z().pow(n - k));
    }
    return {n, std::move(acc)};
}

PolyPseudoLog construct_stirling_c(std::size_t n) {
    IntPolynomial acc;
    for (std::size_t k = 0; k <= n; ++k) {
        Int c = factorial(k) * stirling2(n + 1, k + 1);
        if (parity_sign(static_cast<long>(n + k)) < 0) c = -c;
        acc += poly_one_minus_z().pow(n - k).scaled(c);
    }
    return {n, std::move(acc)};
}

PolyPseudoLog construct_double_sum_expanded(std::size_t n) {
    std::vector<Int> coeffs(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        Int acc = 0;
        for (std::size_t l = 0; l <= k; ++l) {
            Int term = binomial(n + 1, l) * ipow(Int(static_cast<long>(k - l)), n);
            acc += (l % 2 == 0) ? term : -term;
        }
        coeffs[k] = acc;
    }
    return {n, IntPolynomial(std::move(coeffs))};
}

PolyPseudoLog construct_tangent_closed_form(std::size_t n) {
    // (1/2^(n+1)) [ (-1)^floor(n/2 - 1) T(n,1)
    //             + sum_{k=1..n+1} (-1)^floor((n-k)/2 - 1) / k * T(n+1,k) w^k ]
    // with w = (1+z)/(1-z).  Terms where T vanishes by parity are skipped,
    // so each floor is taken of a half-integer, i.e. (m-1)/2 - 1 for odd m.
    std::vector<Rational> q(n + 2, Rational(0));
    Int t_n1 = tangent(n, 1);
    if (t_n1 != 0) {
        long e = (static_cast<long>(n) - 1) / 2 - 1;  // floor(n/2 - 1), n odd here
        q[0] = Rational(parity_sign(e)) * Rational(t_n1);
    }
    for (std::size_t k = 1; k <= n + 1; ++k) {
        Int t = tangent(n + 1, static_cast<long>(k));
        if (t == 0) continue;
        long m = static_cast<long>(n) - static_cast<long>(k);  // odd here
        long e = (m - 1) / 2 - 1;                              // floor(m/2 - 1)
        q[k] = Rational(parity_sign(e)) * Rational(t) / Rational(static_cast<long>(k));
    }
    RationalPolynomial num = substitute_w(q, n + 1);
    num = num.scaled(Rational(Int(1), ipow(Int(2), n + 1)));
    return {n, to_int_polynomial(num)};
}

PolyPseudoLog construct_derivative_polynomial(std::size_t n) {
    // (i/2)^(n+1) P_n(-i w), w = (1+z)/(1-z): coefficient k of the
    // w-polynomial is p_k i^(n+1) (-i)^k / 2^(n+1); the imaginary parts
    // cancel identically once w is substituted.
    const RationalPolynomial& p = derivative_poly(n).poly;
    GaussianRational lead = imaginary_unit_pow(n + 1);
    std::vector<GaussianRational> q(static_cast<std::size_t>(p.degree()) + 1);
    for (std::size_t k = 0; k < q.size(); ++k) {
        GaussianRational minus_i_pow = imaginary_unit_pow(3 * k);  // (-i)^k = i^(3k)
        q[k] = GaussianRational(p.coeff(k)) * lead * minus_i_pow;
    }
    GaussianPolynomial num_g = substitute_w(q, n + 1);
    RationalPolynomial num = real_polynomial(num_g);
    num = num.scaled(Rational(Int(1), ipow(Int(2), n + 1)));
    return {n, to_int_polynomial(num)};
}

GaussianSeries to_gaussian(const RationalSeries& s) {
    std::vector<GaussianRational> v(s.coefficients().begin(), s.coefficients().end());
    return GaussianSeries(std::move(v));
}

std::vector<Rational> gf_taylor_p_kernel(const Rational& z, std::size_t order) {
    GaussianSeries e = to_gaussian(exp_series(order));
    GaussianSeries one = GaussianSeries::constant(GaussianRational(1), order);
    GaussianRational minus_i = -GaussianRational::i();
    // tau = -i (1 - e^t)/(1 + e^t) is tan(i t/2) expanded over the rationals
    GaussianSeries tau = ((one - e) * (one + e).inverse()).scaled(minus_i);
    GaussianRational x = minus_i * GaussianRational((Rational(1) + z) / (Rational(1) - z));
    GaussianSeries num = GaussianSeries::constant(x, order) + tau;
    GaussianSeries den = one - tau.scaled(x);
    GaussianSeries k = (num * den.inverse()).scaled(GaussianRational::i() * GaussianRational(Rational(1, 2)));
    std::vector<Rational> out(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
        const GaussianRational& c = k.coeff(j);
        if (!c.is_real())
            throw NonVanishingImaginaryPart("gf_taylor: kernel coefficient " + c.str());
        out[j] = c.re();
    }
    return out;
}

}

std::string to_string(ConstructionMethod m) {
    switch (m) {
        case ConstructionMethod::Operator: return "operator";
        case ConstructionMethod::StirlingA: return "stirling_a";
        case ConstructionMethod::StirlingB: return "stirling_b";
        case ConstructionMethod::StirlingC: return "stirling_c";
        case ConstructionMethod::Eulerian: return "eulerian";
        case ConstructionMethod::DoubleSumExpanded: return "double_sum_expanded";
        case ConstructionMethod::TangentClosedForm: return "tangent_closed_form";
        case ConstructionMethod::DerivativePolynomial: return "derivative_polynomial";
    }
    return "unknown";
}

std::string to_string(GFKernel k) {
    switch (k) {
        case GFKernel::Ka: return "K_a";
        case GFKernel::Kb: return "K_b";
        case GFKernel::Kc: return "K_c";
        case GFKernel::Kd: return "K_d";
        case GFKernel::KP: return "K_P";
    }
    return "unknown";
}

std::string to_string(DoubleSumVariant v) {
    switch (v) {
        case DoubleSumVariant::A: return "a";
        case DoubleSumVariant::B: return "b";
        case DoubleSumVariant::C: return "c";
    }
    return "unknown";
}

PolyPseudoLog canonical(std::size_t n) {
    if (n == 0) return {0, IntPolynomial::monomial(1, 1)};
    return {n, eulerian_polynomial(n)};
}

PolyPseudoLog construct(ConstructionMethod method, std::size_t n) {
    require_positive_order(n, "construct");
    switch (method) {
        case ConstructionMethod::Operator: return construct_operator(n);
        case ConstructionMethod::StirlingA: return construct_stirling_a(n);
        case ConstructionMethod::StirlingB: return construct_stirling_b(n);
        case ConstructionMethod::StirlingC: return construct_stirling_c(n);
        case ConstructionMethod::Eulerian: return {n, eulerian_polynomial(n)};
        case ConstructionMethod::DoubleSumExpanded: return construct_double_sum_expanded(n);
        case ConstructionMethod::TangentClosedForm: return construct_tangent_closed_form(n);
        case ConstructionMethod::DerivativePolynomial: return construct_derivative_polynomial(n);
    }
    throw std::invalid_argument("construct: unknown method");
}

Rational eval_exact(std::size_t n, const Rational& z) {
    require_not_pole(z);
    PolyPseudoLog f = canonical(n);
    Rational num = to_rational_polynomial(f.numerator()).evaluate(z);
    Rational den = (Rational(1) - z).pow(static_cast<long>(f.denominator_exponent()));
    return num / den;
}

Rational eval_double_sum(DoubleSumVariant variant, std::size_t n, const Rational& z) {
    require_positive_order(n, "eval_double_sum");
    require_not_pole(z);
    Rational u = (Rational(1) - z).inverse();  // 1/(1-z)
    Rational acc(0);
    switch (variant) {
        case DoubleSumVariant::A:
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t l = 0; l <= k; ++l) {
                    Rational term = Rational(Int(binomial(k, l) * ipow(Int(static_cast<long>(l)), n))) *
                                    z.pow(static_cast<long>(k)) * u.pow(static_cast<long>(k) + 1);
                    acc += ((k - l) % 2 == 0) ? term : -term;
                }
            break;
        case DoubleSumVariant::B:
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t l = 0; l <= k; ++l) {
                    Rational term = Rational(Int(binomial(k, l) * ipow(Int(static_cast<long>(l)), n))) * z *
                                    u.pow(static_cast<long>(k) + 1);
                    acc += parity_sign(static_cast<long>(n) - static_cast<long>(l)) > 0 ? term : -term;
                }
            break;
        case DoubleSumVariant::C:
            for (std::size_t k = 0; k <= n; ++k)
                for (std::size_t l = 0; l <= k + 1; ++l) {
                    Rational term = Rational(Int(binomial(k + 1, l) * ipow(Int(static_cast<long>(l)), n + 1))) *
                                    u.pow(static_cast<long>(k) + 1) / Rational(static_cast<long>(k) + 1);
                    acc += parity_sign(static_cast<long>(n) + 1 - static_cast<long>(l)) > 0 ? term : -term;
                }
            break;
    }
    return acc;
}

Rational eval_series_oracle(std::size_t n, const Rational& z, unsigned long terms) {
    if (terms < 1) throw std::invalid_argument("eval_series_oracle: needs at least one term");
    if (z.abs() >= Rational(1))
        throw std::domain_error("eval_series_oracle: series converges only for |z| < 1");
    Rational acc(0), zk(1);
    for (unsigned long k = 1; k <= terms; ++k) {
        zk *= z;
        acc += Rational(ipow(Int(static_cast<long>(k)), n)) * zk;
    }
    return acc;
}

Rational special_value_neg1(std::size_t n) {
    require_positive_order(n, "special_value_neg1");
    Rational factor = Rational(1) - Rational(ipow(Int(2), n + 1));
    return factor * bernoulli(n + 1) / Rational(static_cast<long>(n) + 1);
}

std::vector<Rational> gf_taylor(GFKernel kernel, const Rational& z, std::size_t order) {
    require_not_pole(z);
    if (kernel == GFKernel::KP) return gf_taylor_p_kernel(z, order);
    RationalSeries e = exp_series(order);
    RationalSeries one = RationalSeries::constant(Rational(1), order);
    RationalSeries k = [&] {
        switch (kernel) {
            case GFKernel::Ka: return (one - e.scaled(z)).inverse();
            case GFKernel::Kb: return (e - RationalSeries::constant(z, order)).inverse().scaled(z);
            case GFKernel::Kc: return e * (e - RationalSeries::constant(z, order)).inverse();
            default:  // Kd
                return ((one + e.scaled(z)) * (one - e.scaled(z)).inverse()).scaled(Rational(1, 2));
        }
    }();
    return k.coefficients();
}

}
