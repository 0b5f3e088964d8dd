#ifndef PPL_CONSTRUCT_HPP
#define PPL_CONSTRUCT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ppl/errors.hpp"
#include "ppl/pseudolog.hpp"
#include "ppl/rational.hpp"

namespace ppl {

/// The independent closed-form routes to Li_{-n}(z).  Every variant reduces
/// to the identical canonical PolyPseudoLog for every n >= 1.
enum class ConstructionMethod {
    Operator,              // n-fold z d/dz applied to 1/(1-z)
    StirlingA,             // sum_k k! S(n,k) z^k / (1-z)^(k+1)
    StirlingB,             // sum_k (-1)^(n+k) k! S(n,k) z / (1-z)^(k+1)
    StirlingC,             // sum_k (-1)^(n+k) k! S(n+1,k+1) / (1-z)^(k+1)
    Eulerian,              // A_n(z) / (1-z)^(n+1)
    DoubleSumExpanded,     // Eulerian route with the alternating sum left unexpanded
    TangentClosedForm,     // tangent-number polynomial in w = (1+z)/(1-z)
    DerivativePolynomial,  // (i/2)^(n+1) P_n(-i (1+z)/(1-z)), Gaussian route
};

constexpr ConstructionMethod kAllConstructionMethods[] = {
    ConstructionMethod::Operator,          ConstructionMethod::StirlingA,
    ConstructionMethod::StirlingB,         ConstructionMethod::StirlingC,
    ConstructionMethod::Eulerian,          ConstructionMethod::DoubleSumExpanded,
    ConstructionMethod::TangentClosedForm, ConstructionMethod::DerivativePolynomial,
};

std::string to_string(ConstructionMethod m);

/// Generating-function kernels whose t-Taylor coefficients at fixed rational
/// z reproduce Li_{-n}(z).  The verified coefficient relations are:
///   Ka: 1/(1 - z e^t)                 n! c_n = Li_{-n}(z), n >= 1; c_0 = 1 + Li_0(z)
///   Kb: z/(e^t - z)                   n! c_n = (-1)^n Li_{-n}(z), n >= 0
///   Kc: e^t/(e^t - z)                 n! c_n = (-1)^n Li_{-n}(z), n >= 1; c_0 = 1 + Li_0(z)
///   Kd: (1/2)(1 + z e^t)/(1 - z e^t)  n! c_n = Li_{-n}(z), n >= 1; c_0 = 1/2 + Li_0(z)
///   KP: (i/2)(x + tau)/(1 - x tau)    n! c_n = Li_{-n}(z), n >= 1,
///       with x = -i (1+z)/(1-z) and tau = -i (1 - e^t)/(1 + e^t); the
///       derivative-polynomial generating function after substitution.
enum class GFKernel { Ka, Kb, Kc, Kd, KP };

constexpr GFKernel kAllGFKernels[] = {GFKernel::Ka, GFKernel::Kb, GFKernel::Kc, GFKernel::Kd, GFKernel::KP};

std::string to_string(GFKernel k);

/// The reference canonical form: numerator A_n(z) over (1-z)^(n+1), with the
/// order-zero special case z/(1-z).
PolyPseudoLog canonical(std::size_t n);

/// Builds Li_{-n} (n >= 1) by the chosen route, reducing its natural
/// representation to canonical form by exact algebra.
PolyPseudoLog construct(ConstructionMethod method, std::size_t n);

/// N(z)/(1-z)^(n+1) at a rational point; throws PoleAtUnity at z = 1.
Rational eval_exact(std::size_t n, const Rational& z);

/// Double-finite-sum evaluations, computed exactly as written (no algebraic
/// simplification before summation):
///   A: sum_{k=1..n} sum_{l=0..k} (-1)^(k-l) C(k,l) l^n z^k     / (1-z)^(k+1)
///   B: sum_{k=1..n} sum_{l=0..k} (-1)^(n-l) C(k,l) l^n z       / (1-z)^(k+1)
///   C: sum_{k=0..n} sum_{l=0..k+1} (-1)^(n+1-l)/(k+1) C(k+1,l) l^(n+1) / (1-z)^(k+1)
enum class DoubleSumVariant { A, B, C };

std::string to_string(DoubleSumVariant v);

Rational eval_double_sum(DoubleSumVariant variant, std::size_t n, const Rational& z);

/// Exact partial sum sum_{k=1..terms} k^n z^k; requires |z| < 1 so the full
/// series it truncates converges.
Rational eval_series_oracle(std::size_t n, const Rational& z, unsigned long terms);

/// Li_{-n}(-1) = (1 - 2^(n+1)) B_{n+1} / (n+1) for n >= 1; zero at even n.
Rational special_value_neg1(std::size_t n);

/// Exact t-Taylor coefficients c_0..c_order of the chosen kernel at a fixed
/// rational z, by truncated-series algebra.
std::vector<Rational> gf_taylor(GFKernel kernel, const Rational& z, std::size_t order);

}

#endif
