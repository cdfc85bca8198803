#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace hclif {

using Rational = mpq_class;

// Parses "p", "-p", or "p/q" in base 10. Result is canonicalized.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// Lowest terms, no decimals: "3", "-1/2".
inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Complex rational a + b*i. Exact field arithmetic.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // |x|^2 = x * conj(x), always a nonnegative rational.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        if (n == 0) throw std::domain_error("division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// "re" when im = 0, "im*i" when re = 0, otherwise "re+im*i" / "re-|im|*i".
inline std::string gaussian_str(const GaussianRational& x) {
    if (x.im == 0) return rational_str(x.re);
    std::string ims = rational_str(x.im) + "*i";
    if (x.re == 0) return ims;
    if (x.im > 0) return rational_str(x.re) + "+" + ims;
    return rational_str(x.re) + ims;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
    return os << gaussian_str(x);
}

// p! as an exact rational; p < 0 is rejected.
inline Rational factorial(long p) {
    if (p < 0) throw std::domain_error("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
    return Rational(f);
}

// (-1)^p for any integer p, including negative.
inline int parity_sign(long p) { return (p % 2 == 0) ? 1 : -1; }

}  // namespace hclif
