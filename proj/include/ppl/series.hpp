#ifndef PPL_SERIES_HPP
#define PPL_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppl/polynomial.hpp"
#include "ppl/rational.hpp"

namespace ppl {

/// Default truncation order: covers every generating-function check in the
/// battery with margin at negligible cost.
inline constexpr std::size_t kDefaultSeriesOrder = 12;

/// Formal power series in t kept to a fixed truncation order N, with exact
/// coefficients.  All arithmetic is exact modulo t^(N+1); binary operations
/// on series of different orders truncate to the smaller one.
template <typename T>
class TruncatedSeries {
public:
    /// Zero series of the given truncation order.
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, T(0)) {}
    explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }

    static TruncatedSeries constant(const T& v, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }
    static TruncatedSeries variable(std::size_t order) {
        if (order < 1) throw std::invalid_argument("TruncatedSeries: order < 1 cannot hold t");
        TruncatedSeries s(order);
        s.c_[1] = T(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const T& coeff(std::size_t k) const {
        if (k >= c_.size()) throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
        return c_[k];
    }
    const std::vector<T>& coefficients() const { return c_; }

    TruncatedSeries operator-() const {
        TruncatedSeries s = *this;
        for (T& x : s.c_) x = -x;
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<T> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = a.c_[k] + b.c_[k];
        return TruncatedSeries(std::move(v));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        std::vector<T> v(n, T(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; i + j < n; ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return TruncatedSeries(std::move(v));
    }

    TruncatedSeries scaled(const T& v) const {
        TruncatedSeries s = *this;
        for (T& x : s.c_) x = x * v;
        return s;
    }

    /// Multiplicative inverse modulo t^(N+1); requires a nonzero constant term.
    TruncatedSeries inverse() const {
        if (c_[0] == T(0))
            throw std::domain_error("TruncatedSeries: inverse requires nonzero constant term");
        std::vector<T> b(c_.size(), T(0));
        T r = inv_coeff(c_[0]);
        b[0] = r;
        for (std::size_t k = 1; k < c_.size(); ++k) {
            T acc(0);
            for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * b[k - j];
            b[k] = -(r * acc);
        }
        return TruncatedSeries(std::move(b));
    }

    /// d/dt.  A series known modulo t^(N+1) determines its derivative modulo
    /// t^N, so the truncation order drops by one (floored at zero).
    TruncatedSeries derivative() const {
        if (c_.size() == 1) return TruncatedSeries(std::size_t{0});
        std::vector<T> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * T(static_cast<long>(k));
        return TruncatedSeries(std::move(v));
    }

    TruncatedSeries pow(unsigned long e) const {
        TruncatedSeries acc = constant(T(1), order()), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    static T inv_coeff(const T& v) {
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, GaussianRational>) {
            return v.inverse();
        } else {
            return T(1) / v;
        }
    }

    std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<Rational>;
using GaussianSeries = TruncatedSeries<GaussianRational>;

/// e^t to the given truncation order.
inline RationalSeries exp_series(std::size_t order) {
    std::vector<Rational> v(order + 1);
    Int kfac = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) kfac *= static_cast<long>(k);
        v[k] = Rational(Int(1), kfac);
    }
    return RationalSeries(std::move(v));
}

/// sin t and cos t to the given truncation order.
inline RationalSeries sin_series(std::size_t order) {
    std::vector<Rational> v(order + 1, Rational(0));
    Int kfac = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        kfac *= static_cast<long>(k);
        if (k % 2 == 1) v[k] = Rational(Int((k / 2) % 2 == 0 ? 1 : -1), kfac);
    }
    return RationalSeries(std::move(v));
}

inline RationalSeries cos_series(std::size_t order) {
    std::vector<Rational> v(order + 1, Rational(0));
    Int kfac = 1;
    v[0] = Rational(1);
    for (std::size_t k = 1; k <= order; ++k) {
        kfac *= static_cast<long>(k);
        if (k % 2 == 0) v[k] = Rational(Int((k / 2) % 2 == 0 ? 1 : -1), kfac);
    }
    return RationalSeries(std::move(v));
}

/// tan t = sin t / cos t, the generating series of the higher-order tangent
/// numbers through its powers.
inline RationalSeries tan_series(std::size_t order) {
    return sin_series(order) * cos_series(order).inverse();
}

/// Horner evaluation of a polynomial at a series argument.
template <typename T>
TruncatedSeries<T> evaluate_at(const Polynomial<T>& p, const TruncatedSeries<T>& s) {
    TruncatedSeries<T> acc = TruncatedSeries<T>::constant(T(0), s.order());
    if (p.is_zero()) return acc;
    for (std::size_t k = static_cast<std::size_t>(p.degree()) + 1; k-- > 0;)
        acc = acc * s + TruncatedSeries<T>::constant(p.coeff(k), s.order());
    return acc;
}

}

#endif
