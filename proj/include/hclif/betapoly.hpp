#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hclif/clifford.hpp"
#include "hclif/rational.hpp"

namespace hclif {

// Element of Q[beta] / (beta(beta-1)...(beta-n)), stored as coefficients of
// beta^0..beta^n. The modulus has n+1 distinct integer roots, so reduction is
// plain polynomial division by a monic polynomial.
class BetaPoly {
public:
    explicit BetaPoly(int n = 1) : n_(n), c_(n + 1, Rational(0)) {
        if (n < 1) throw std::invalid_argument("dimension must be positive");
    }

    static BetaPoly constant(int n, const Rational& v) {
        BetaPoly p(n);
        p.c_[0] = v;
        return p;
    }

    static BetaPoly beta(int n) {
        BetaPoly p(n);
        if (n >= 1) p.c_[1] = 1;
        return p;
    }

    int n() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    const Rational& coeff(int k) const {
        if (k < 0 || k > n_) throw std::out_of_range("beta power out of range");
        return c_[k];
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool is_constant() const {
        for (int k = 1; k <= n_; ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    BetaPoly operator-() const {
        BetaPoly r(n_);
        for (int k = 0; k <= n_; ++k) r.c_[k] = -c_[k];
        return r;
    }

    BetaPoly& operator+=(const BetaPoly& o) {
        check(o);
        for (int k = 0; k <= n_; ++k) c_[k] += o.c_[k];
        return *this;
    }
    BetaPoly& operator-=(const BetaPoly& o) { return *this += -o; }

    friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
    friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }

    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
        a.check(b);
        std::vector<Rational> raw(2 * a.n_ + 1, Rational(0));
        for (int i = 0; i <= a.n_; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j <= a.n_; ++j) raw[i + j] += a.c_[i] * b.c_[j];
        }
        return beta_reduce(raw, a.n_);
    }

    friend BetaPoly operator*(const Rational& s, const BetaPoly& p) {
        BetaPoly r(p.n_);
        for (int k = 0; k <= p.n_; ++k) r.c_[k] = s * p.c_[k];
        return r;
    }
    friend BetaPoly operator*(const BetaPoly& p, const Rational& s) { return s * p; }

    BetaPoly operator/(const Rational& s) const {
        if (s == 0) throw std::invalid_argument("division by zero");
        return Rational(1) / s * *this;
    }

    friend bool operator==(const BetaPoly& a, const BetaPoly& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BetaPoly& a, const BetaPoly& b) { return !(a == b); }

    // Canonical remainder of an arbitrary coefficient list modulo
    // beta(beta-1)...(beta-n).
    static BetaPoly beta_reduce(std::vector<Rational> raw, int n) {
        BetaPoly r(n);
        std::vector<Rational> mod = modulus_coeffs(n);  // degree n+1, monic
        for (int d = static_cast<int>(raw.size()) - 1; d > n; --d) {
            if (raw[d] == 0) continue;
            Rational q = raw[d];
            for (int j = 0; j <= n + 1; ++j) raw[d - n - 1 + j] -= q * mod[j];
        }
        for (int k = 0; k <= n && k < static_cast<int>(raw.size()); ++k) r.c_[k] = raw[k];
        return r;
    }

    // Substitutes the fermionic Euler element for beta.
    CliffordElement evaluate(const Algebra& alg) const {
        if (alg.n != n_) throw std::invalid_argument("dimension mismatch");
        CliffordElement b = beta_element(alg);
        CliffordElement acc = CliffordElement::zero(alg);
        for (int k = n_; k >= 0; --k) {
            acc = acc * b;
            acc = acc + CliffordElement::scalar(alg, GaussianRational{c_[k], Rational(0)});
        }
        return acc;
    }

private:
    void check(const BetaPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    }

    static std::vector<Rational> modulus_coeffs(int n) {
        std::vector<Rational> m{Rational(1)};  // product of (beta - j), j = 0..n
        for (int j = 0; j <= n; ++j) {
            std::vector<Rational> nm(m.size() + 1, Rational(0));
            for (size_t i = 0; i < m.size(); ++i) {
                nm[i + 1] += m[i];
                nm[i] -= Rational(j) * m[i];
            }
            m = std::move(nm);
        }
        return m;
    }

    int n_;
    std::vector<Rational> c_;
};

inline BetaPoly beta_reduce(const std::vector<Rational>& raw, int n) {
    return BetaPoly::beta_reduce(raw, n);
}

inline std::string betapoly_str(const BetaPoly& p) {
    std::string out = "[";
    for (int k = 0; k <= p.n(); ++k) {
        if (k) out += ", ";
        out += rational_str(p.coeff(k));
    }
    return out + "]";
}

// Finite combination of powers nu^(offset + m), m = 0.., with BetaPoly
// coefficients. The offset may be any rational, so a single generalized power
// nu^s is representable; ordinary truncated power series have offset 0.
// Canonical form: first and last stored coefficients nonzero; zero is the
// empty list with offset 0.
class NuSeries {
public:
    explicit NuSeries(int n = 1) : n_(n), offset_(0) {
        if (n < 1) throw std::invalid_argument("dimension must be positive");
    }

    static NuSeries zero(int n) { return NuSeries(n); }

    static NuSeries constant(int n, const BetaPoly& v) {
        return monomial(n, v, Rational(0));
    }

    static NuSeries monomial(int n, const BetaPoly& v, const Rational& exponent) {
        NuSeries r(n);
        if (v.n() != n) throw std::invalid_argument("dimension mismatch");
        if (!v.is_zero()) {
            r.offset_ = exponent;
            r.c_.push_back(v);
        }
        return r;
    }

    // Polynomial in nu from low-degree-first BetaPoly coefficients.
    static NuSeries from_coeffs(int n, std::vector<BetaPoly> coeffs) {
        NuSeries r(n);
        for (const auto& p : coeffs)
            if (p.n() != n) throw std::invalid_argument("dimension mismatch");
        r.c_ = std::move(coeffs);
        r.normalize();
        return r;
    }

    int n() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const Rational& offset() const { return offset_; }
    const std::vector<BetaPoly>& coeffs() const { return c_; }

    // Largest exponent present; zero series reports 0.
    Rational top_exponent() const {
        if (c_.empty()) return Rational(0);
        return offset_ + Rational(static_cast<long>(c_.size() - 1));
    }

    // True when every nonzero term has a nonnegative integer exponent.
    bool is_polynomial() const {
        return c_.empty() || (offset_.get_den() == 1 && offset_ >= 0);
    }

    // Coefficient of nu^e.
    BetaPoly coeff_at(const Rational& e) const {
        if (c_.empty()) return BetaPoly(n_);
        Rational rel = e - offset_;
        if (rel.get_den() != 1 || rel < 0) return BetaPoly(n_);
        long m = static_cast<long>(rel.get_num().get_si());
        if (m >= static_cast<long>(c_.size())) return BetaPoly(n_);
        return c_[m];
    }

    NuSeries operator-() const {
        NuSeries r(n_);
        r.offset_ = offset_;
        r.c_.reserve(c_.size());
        for (const auto& p : c_) r.c_.push_back(-p);
        return r;
    }

    friend NuSeries operator+(const NuSeries& a, const NuSeries& b) {
        a.check(b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Rational diff = a.offset_ - b.offset_;
        if (diff.get_den() != 1)
            throw std::invalid_argument("incompatible exponent families");
        Rational lo = std::min(a.offset_, b.offset_);
        long sa = static_cast<long>(Rational(a.offset_ - lo).get_num().get_si());
        long sb = static_cast<long>(Rational(b.offset_ - lo).get_num().get_si());
        long len = std::max(sa + static_cast<long>(a.c_.size()),
                            sb + static_cast<long>(b.c_.size()));
        NuSeries r(a.n_);
        r.offset_ = lo;
        r.c_.assign(len, BetaPoly(a.n_));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[sa + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[sb + i] += b.c_[i];
        r.normalize();
        return r;
    }

    friend NuSeries operator-(const NuSeries& a, const NuSeries& b) { return a + -b; }

    NuSeries& operator+=(const NuSeries& o) { return *this = *this + o; }
    NuSeries& operator-=(const NuSeries& o) { return *this = *this - o; }

    friend NuSeries operator*(const BetaPoly& s, const NuSeries& g) {
        if (s.n() != g.n_) throw std::invalid_argument("dimension mismatch");
        NuSeries r(g.n_);
        r.offset_ = g.offset_;
        r.c_.reserve(g.c_.size());
        for (const auto& p : g.c_) r.c_.push_back(s * p);
        r.normalize();
        return r;
    }

    friend NuSeries operator*(const Rational& s, const NuSeries& g) {
        return BetaPoly::constant(g.n_, s) * g;
    }

    NuSeries operator/(const Rational& s) const {
        if (s == 0) throw std::invalid_argument("division by zero");
        return Rational(1) / s * *this;
    }

    // Multiplies by nu^e.
    NuSeries shift(const Rational& e) const {
        NuSeries r = *this;
        if (!r.c_.empty()) r.offset_ += e;
        return r;
    }

    // Term-by-term d/dnu.
    NuSeries derivative() const {
        NuSeries r(n_);
        if (c_.empty()) return r;
        r.offset_ = offset_ - 1;
        r.c_.reserve(c_.size());
        for (size_t m = 0; m < c_.size(); ++m)
            r.c_.push_back((offset_ + Rational(static_cast<long>(m))) * c_[m]);
        r.normalize();
        return r;
    }

    // nu * d/dnu, exponent-preserving.
    NuSeries nu_derivative() const { return derivative().shift(1); }

    // Evaluates at a rational point; requires integer exponents >= 0.
    BetaPoly evaluate_at(const Rational& nu_value) const {
        if (!is_polynomial())
            throw std::domain_error("evaluation requires polynomial exponents");
        BetaPoly acc(n_);
        for (size_t m = c_.size(); m-- > 0;)
            acc = nu_value * acc + c_[m];
        long base = c_.empty() ? 0 : offset_.get_num().get_si();
        for (long i = 0; i < base; ++i) acc = nu_value * acc;
        return acc;
    }

    friend bool operator==(const NuSeries& a, const NuSeries& b) {
        if (a.n_ != b.n_) return false;
        if (a.c_.empty() && b.c_.empty()) return true;
        return a.offset_ == b.offset_ && a.c_ == b.c_;
    }
    friend bool operator!=(const NuSeries& a, const NuSeries& b) { return !(a == b); }

private:
    void check(const NuSeries& o) const {
        if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    }

    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            offset_ = 0;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + lead);
            offset_ += Rational(static_cast<long>(lead));
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    int n_;
    Rational offset_;
    std::vector<BetaPoly> c_;
};

inline std::string nuseries_str(const NuSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (size_t m = 0; m < s.coeffs().size(); ++m) {
        if (s.coeffs()[m].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += betapoly_str(s.coeffs()[m]);
        Rational e = s.offset() + Rational(static_cast<long>(m));
        if (e != 0) out += " nu^" + rational_str(e);
    }
    return out;
}

}  // namespace hclif
