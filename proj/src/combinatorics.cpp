#include "ppl/combinatorics.hpp"

#include <stdexcept>

#include "ppl/series.hpp"

namespace ppl {

Int TriangleTable::at(std::size_t n, long k) const {
    if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
    ensure_rows(n);
    std::lock_guard<std::mutex> lock(mu_);
    return rows_[n][static_cast<std::size_t>(k)];
}

std::vector<Int> TriangleTable::row(std::size_t n) const {
    ensure_rows(n);
    std::lock_guard<std::mutex> lock(mu_);
    return rows_[n];
}

void TriangleTable::ensure_rows(std::size_t n_max) const {
    std::lock_guard<std::mutex> lock(mu_);
    extend_locked(n_max);
}

void TriangleTable::extend_locked(std::size_t n_max) const {
    while (rows_.size() <= n_max) rows_.push_back(build_row(rows_.size()));
}

std::vector<Int> TriangleTable::build_row(std::size_t n) const {
    std::vector<Int> row(n + 1, 0);
    if (n == 0) {
        row[0] = 1;  // S(0,0) = A(0,0) = T(0,0) = 1
        return row;
    }
    const std::vector<Int>& prev = rows_[n - 1];
    auto prev_at = [&](long k) -> Int {
        return (k < 0 || static_cast<std::size_t>(k) >= prev.size()) ? Int(0) : prev[static_cast<std::size_t>(k)];
    };
    switch (kind_) {
        case TriangleKind::Stirling2:
            for (std::size_t k = 1; k <= n; ++k)
                row[k] = Int(static_cast<long>(k)) * prev_at(static_cast<long>(k)) + prev_at(static_cast<long>(k) - 1);
            break;
        case TriangleKind::Eulerian:
            // built from the explicit alternating sum, not a recurrence
            for (std::size_t k = 1; k <= n; ++k) {
                Int acc = 0;
                for (std::size_t l = 0; l <= k; ++l) {
                    Int term = binomial(n + 1, l) * ipow(Int(static_cast<long>(k - l)), n);
                    acc += (l % 2 == 0) ? term : -term;
                }
                row[k] = acc;
            }
            break;
        case TriangleKind::Tangent:
            for (std::size_t k = 1; k <= n; ++k)
                row[k] = Int(static_cast<long>(k)) * (prev_at(static_cast<long>(k) - 1) + prev_at(static_cast<long>(k) + 1));
            break;
    }
    return row;
}

namespace {

const TriangleTable& stirling2_table() {
    static const TriangleTable t(TriangleKind::Stirling2);
    return t;
}

const TriangleTable& eulerian_table() {
    static const TriangleTable t(TriangleKind::Eulerian);
    return t;
}

const TriangleTable& tangent_table() {
    static const TriangleTable t(TriangleKind::Tangent);
    return t;
}

}

Int stirling2(std::size_t n, std::size_t k) {
    return stirling2_table().at(n, static_cast<long>(k));
}

Int stirling2_explicit(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int acc = 0;
    for (std::size_t l = 0; l <= k; ++l) {
        Int term = binomial(k, l) * ipow(Int(static_cast<long>(l)), n);
        acc += ((k - l) % 2 == 0) ? term : -term;
    }
    Int kfac = factorial(k);
    if (mpz_divisible_p(acc.get_mpz_t(), kfac.get_mpz_t()) == 0)
        throw std::logic_error("stirling2_explicit: sum not divisible by k!");
    Int out;
    mpz_divexact(out.get_mpz_t(), acc.get_mpz_t(), kfac.get_mpz_t());
    return out;
}

Int eulerian(std::size_t n, long k) {
    return eulerian_table().at(n, k);
}

IntPolynomial eulerian_polynomial(std::size_t n) {
    return IntPolynomial(eulerian_table().row(n));
}

Int tangent(std::size_t n, long k) {
    return tangent_table().at(n, k);
}

Int tangent_via_series(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) return 0;
    RationalSeries p = tan_series(n).pow(k);
    Rational c = p.coeff(n) * Rational(factorial(n));
    if (!c.is_integer()) throw std::logic_error("tangent_via_series: non-integer coefficient");
    return c.numerator();
}

namespace {

class BernoulliCache {
public:
    Rational get(std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (values_.size() <= n) {
            std::size_t m = values_.size();
            // B_m = -1/(m+1) sum_{k=0..m-1} C(m+1,k) B_k
            Rational acc(0);
            for (std::size_t k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * values_[k];
            values_.push_back(-acc / Rational(static_cast<long>(m) + 1));
        }
        return values_[n];
    }

private:
    std::mutex mu_;
    std::vector<Rational> values_{Rational(1)};
};

}

Rational bernoulli(std::size_t n) {
    static BernoulliCache cache;
    return cache.get(n);
}

DerivativePolynomial::DerivativePolynomial(std::size_t order_, RationalPolynomial poly_)
    : order(order_), poly(std::move(poly_)) {
    if (poly.degree() != static_cast<int>(order) + 1)
        throw std::logic_error("DerivativePolynomial: degree must be order + 1");
    // parity P_n(-x) = (-1)^(n+1) P_n(x): only exponents of one parity occur
    for (std::size_t k = 0; k <= static_cast<std::size_t>(poly.degree()); ++k)
        if (!poly.coeff(k).is_zero() && (k % 2) != ((order + 1) % 2))
            throw std::logic_error("DerivativePolynomial: parity violated at exponent " + std::to_string(k));
}

DerivativePolynomial derivative_poly(std::size_t n) {
    static const RationalPolynomial one_plus_x2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    RationalPolynomial p = RationalPolynomial::monomial(Rational(1), 1);
    for (std::size_t m = 1; m <= n; ++m) p = one_plus_x2 * p.derivative();
    return {n, std::move(p)};
}

DerivativePolynomial derivative_poly_via_tangent(std::size_t n) {
    if (n < 1) throw std::invalid_argument("derivative_poly_via_tangent: requires n >= 1");
    std::vector<Rational> v(n + 2, Rational(0));
    v[0] = Rational(tangent(n, 1));
    for (std::size_t k = 1; k <= n + 1; ++k)
        v[k] = Rational(tangent(n + 1, static_cast<long>(k))) / Rational(static_cast<long>(k));
    return {n, RationalPolynomial(std::move(v))};
}

}
