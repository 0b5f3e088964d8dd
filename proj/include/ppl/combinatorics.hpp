#ifndef PPL_COMBINATORICS_HPP
#define PPL_COMBINATORICS_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "ppl/polynomial.hpp"
#include "ppl/rational.hpp"

namespace ppl {

/// base^e with the 0^0 = 1 convention the explicit combinatorial sums rely on.
inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// (-1)^j as an int, valid for negative j too.
inline int parity_sign(long j) { return j % 2 == 0 ? 1 : -1; }

enum class TriangleKind { Stirling2, Eulerian, Tangent };

/// Memoized triangle of Stirling-second-kind, Eulerian, or higher-order
/// tangent numbers.  Row n holds entries k = 0..n.  Rows are appended on
/// demand under an internal lock and never evicted, so lookups of already
/// computed rows are safe from concurrent threads.
class TriangleTable {
public:
    explicit TriangleTable(TriangleKind kind) : kind_(kind) {}

    TriangleKind kind() const { return kind_; }

    /// Entry (n, k); zero outside the triangle's support.
    Int at(std::size_t n, long k) const;

    /// Full row n, entries k = 0..n.
    std::vector<Int> row(std::size_t n) const;

    void ensure_rows(std::size_t n_max) const;

private:
    void extend_locked(std::size_t n_max) const;
    std::vector<Int> build_row(std::size_t n) const;

    TriangleKind kind_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Int>> rows_;
};

/// Stirling number of the second kind S(n, k), from the memoized recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1).  Zero for k > n, matching the
/// explicit-sum convention.
Int stirling2(std::size_t n, std::size_t k);

/// S(n, k) by the explicit alternating sum
/// (1/k!) sum_{l=0..k} (-1)^(k-l) C(k,l) l^n; the independent cross-check
/// for the recurrence route.
Int stirling2_explicit(std::size_t n, std::size_t k);

/// Eulerian number A(n, k) by the explicit alternating sum
/// sum_{l=0..k} (-1)^l C(n+1,l) (k-l)^n, with 0^0 = 1 so A(0,0) = 1.
/// Zero for k outside 0..n.
Int eulerian(std::size_t n, long k);

/// A_n(x) = sum_k A(n,k) x^k.  Degree n; row sum A_n(1) = n!.
IntPolynomial eulerian_polynomial(std::size_t n);

/// Higher-order tangent number T(n, k): n![t^n] tan^k(t).  Computed by the
/// memoized recurrence T(n+1,k) = k (T(n,k-1) + T(n,k+1)) seeded with
/// T(0,0) = 1; zero outside the support 1 <= k <= n with n = k (mod 2).
Int tangent(std::size_t n, long k);

/// T(n, k) read directly off repeated truncated-series products of tan t;
/// the independent cross-check for the recurrence route.
Int tangent_via_series(std::size_t n, std::size_t k);

/// Bernoulli number B_n in the B_1 = -1/2 convention, from the defining
/// recurrence sum_{k=0..n} C(n+1,k) B_k = 0.
Rational bernoulli(std::size_t n);

/// Derivative polynomial for tangent: d^n/dt^n tan t = P_n(tan t).
/// Degree n+1, integer coefficients, parity P_n(-x) = (-1)^(n+1) P_n(x).
struct DerivativePolynomial {
    DerivativePolynomial(std::size_t order, RationalPolynomial poly);

    std::size_t order;
    RationalPolynomial poly;

    friend bool operator==(const DerivativePolynomial& a, const DerivativePolynomial& b) {
        return a.order == b.order && a.poly == b.poly;
    }
};

/// P_n by the recurrence P_0(x) = x, P_n(x) = (1+x^2) P_{n-1}'(x).
DerivativePolynomial derivative_poly(std::size_t n);

/// P_n assembled from tangent numbers:
/// P_n(x) = T(n,1) + sum_{k=1..n+1} T(n+1,k)/k x^k, for n >= 1.
/// Must equal derivative_poly(n) exactly.
DerivativePolynomial derivative_poly_via_tangent(std::size_t n);

}

#endif
