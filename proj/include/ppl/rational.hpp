#ifndef PPL_RATIONAL_HPP
#define PPL_RATIONAL_HPP

#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ppl {

/// Arbitrary-precision integer.  Coefficient type of the canonical
/// numerator polynomials and of every combinatorial triangle.
using Int = mpz_class;

/// Exact rational scalar.
///
/// Thin wrapper over GMP's mpq_class that keeps the value canonical at all
/// times: lowest terms, denominator > 0, zero stored as 0/1.  All arithmetic
/// is exact; there is no rounding anywhere in this library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) : q_(num, den) { canonicalize(); }
    Rational(long num, long den) : q_(num, den) { canonicalize(); }
    explicit Rational(mpq_class q) : q_(std::move(q)) { canonicalize(); }

    Int numerator() const { return q_.get_num(); }
    Int denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(unchecked{}, mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(unchecked{}, mpq_class(1) / q_);
    }

    /// Exact integer power; negative exponents invert (zero base rejected).
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Int num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(unchecked{}, mpq_class(num) / mpq_class(den));
    }

    /// Parses "p/q" or "p" (optional leading '-').  Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view s);

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

private:
    struct unchecked {};
    Rational(unchecked, mpq_class q) : q_(std::move(q)) {}
    void canonicalize() {
        if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    mpq_class q_;
};

inline Rational Rational::parse(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    std::string num, den = "1";
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        num = std::string(s.substr(0, slash));
        den = std::string(s.substr(slash + 1));
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
    } else {
        num = std::string(s);
    }
    Int n, d;
    if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0) throw bad();
    if (mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) throw bad();
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
}

inline std::string Rational::str() const {
    std::string out = q_.get_num().get_str();
    if (!is_integer()) out += "/" + q_.get_den().get_str();
    return out;
}

/// Gaussian rational a + b*i with exact field arithmetic (i^2 = -1).
/// Used transiently by the derivative-polynomial construction route, where
/// every imaginary part cancels before a result is returned.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(const Int& re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(unsigned long e) const {
        GaussianRational acc(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    std::string str() const { return re_.str() + (im_.sign() < 0 ? "" : "+") + im_.str() + "i"; }
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

private:
    Rational re_, im_;
};

/// i^e for nonnegative e, cycling 1, i, -1, -i.
inline GaussianRational imaginary_unit_pow(unsigned long e) {
    switch (e % 4) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

}

#endif
