#ifndef PPL_POLYNOMIAL_HPP
#define PPL_POLYNOMIAL_HPP

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ppl/errors.hpp"
#include "ppl/rational.hpp"

namespace ppl {

/// Dense univariate polynomial over an exact coefficient ring T.
///
/// Coefficients are indexed by degree and kept normalized: the leading
/// coefficient is nonzero unless the polynomial is zero.  The degree of the
/// zero polynomial is the sentinel kZeroDegree (-1).
template <typename T>
class Polynomial {
public:
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    Polynomial(const T& c) : coeffs_{c} { normalize(); }
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial monomial(const T& c, std::size_t deg) {
        std::vector<T> v(deg + 1, T(0));
        v[deg] = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero beyond the degree.
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
    const std::vector<T>& coefficients() const { return coeffs_; }

    Polynomial operator-() const {
        std::vector<T> v = coeffs_;
        for (T& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const T& c) const {
        std::vector<T> v = coeffs_;
        for (T& x : v) x = x * c;
        return Polynomial(std::move(v));
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> v(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(v));
    }

    /// Exact Horner evaluation at a point of any scalar type S that embeds T.
    template <typename S>
    S evaluate(const S& x) const {
        if (is_zero()) return S(0);
        S acc(coeffs_.back());
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + S(coeffs_[k]);
        return acc;
    }

    Polynomial pow(unsigned long e) const {
        Polynomial acc(T(1)), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    /// Removes an exact factor.  Division with a nonzero remainder (or an
    /// inexact coefficient step over Int) means a broken invariant upstream
    /// and throws std::logic_error.
    Polynomial divide_exact(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        if (is_zero()) return {};
        if (degree() < d.degree()) throw std::logic_error("Polynomial: inexact division (degree)");
        std::vector<T> rem = coeffs_;
        std::vector<T> quot(coeffs_.size() - d.coeffs_.size() + 1, T(0));
        const T& lead = d.coeffs_.back();
        for (std::size_t k = rem.size(); k-- >= d.coeffs_.size();) {
            if (rem[k] == T(0)) continue;
            T q = exact_coeff_div(rem[k], lead);
            std::size_t shift = k - (d.coeffs_.size() - 1);
            quot[shift] = q;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[shift + j] -= q * d.coeffs_[j];
        }
        for (const T& c : rem)
            if (!(c == T(0))) throw std::logic_error("Polynomial: inexact division (remainder)");
        return Polynomial(std::move(quot));
    }

    bool is_divisible_by(const Polynomial& d) const {
        try {
            (void)divide_exact(d);
            return true;
        } catch (const std::logic_error&) {
            return false;
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    static T exact_coeff_div(const T& a, const T& b) {
        if constexpr (std::is_same_v<T, Int>) {
            if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0)
                throw std::logic_error("Polynomial: inexact integer coefficient division");
            Int q;
            mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            return q;
        } else {
            return a / b;
        }
    }

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Int>;
using RationalPolynomial = Polynomial<Rational>;
using GaussianPolynomial = Polynomial<GaussianRational>;

inline RationalPolynomial to_rational_polynomial(const IntPolynomial& p) {
    std::vector<Rational> v;
    v.reserve(p.coefficients().size());
    for (const Int& c : p.coefficients()) v.emplace_back(c);
    return RationalPolynomial(std::move(v));
}

/// Every coefficient must be an exact integer; anything else is a broken
/// invariant upstream.
inline IntPolynomial to_int_polynomial(const RationalPolynomial& p) {
    std::vector<Int> v;
    v.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients()) {
        if (!c.is_integer())
            throw std::logic_error("to_int_polynomial: non-integer coefficient " + c.str());
        v.push_back(c.numerator());
    }
    return IntPolynomial(std::move(v));
}

/// Strips an identically-zero imaginary part, throwing
/// NonVanishingImaginaryPart if any coefficient has one.
inline RationalPolynomial real_polynomial(const GaussianPolynomial& p) {
    std::vector<Rational> v;
    v.reserve(p.coefficients().size());
    for (const GaussianRational& c : p.coefficients()) {
        if (!c.is_real())
            throw NonVanishingImaginaryPart("real_polynomial: coefficient " + c.str());
        v.push_back(c.re());
    }
    return RationalPolynomial(std::move(v));
}

/// Renders with ascending powers, e.g. "1 + 4 z + z^2".
template <typename T>
std::string polynomial_str(const Polynomial<T>& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k) {
        T c = p.coeff(k);
        if (c == T(0)) continue;
        bool neg = c < T(0);
        T a = neg ? T(-c) : c;
        std::string mag;
        if constexpr (std::is_same_v<T, Int>) {
            mag = a.get_str();
        } else {
            mag = a.str();
        }
        std::string term;
        if (k == 0) {
            term = mag;
        } else {
            term = (a == T(1)) ? "" : mag + " ";
            term += var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (first) {
            out = (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

}

#endif
