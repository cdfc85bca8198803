#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hclif/rational.hpp"

namespace hclif {

// A blade is a product of distinct generators e_g, g in 1..m, in increasing
// order; bit g-1 of the mask marks generator g. The empty blade (mask 0) is 1.
using Blade = std::uint64_t;

inline int blade_grade(Blade b) { return std::popcount(b); }

inline Blade blade_from_indices(const std::vector<int>& idx, int m) {
    Blade b = 0;
    for (int g : idx) {
        if (g < 1 || g > m) throw std::invalid_argument("generator index out of range");
        Blade bit = Blade(1) << (g - 1);
        if (b & bit) throw std::invalid_argument("repeated generator index");
        b |= bit;
    }
    return b;
}

inline std::vector<int> blade_indices(Blade b) {
    std::vector<int> idx;
    for (int g = 1; b; ++g, b >>= 1)
        if (b & 1) idx.push_back(g);
    return idx;
}

// Sign of e_A * e_B after sorting the concatenation into increasing order and
// contracting repeated generators with e_g^2 = -1. The product blade is A xor B.
inline int blade_mul_sign(Blade a, Blade b) {
    int swaps = 0;
    for (Blade t = a >> 1; t; t >>= 1) swaps += std::popcount(t & b);
    swaps += std::popcount(a & b);  // each contracted pair contributes e_g^2 = -1
    return (swaps & 1) ? -1 : 1;
}

// Which complex Clifford algebra an element lives in. n is the number of
// complex z-directions; extended adds the two generators backing f_0, f_0d.
// Generators 1..n pair with n+1..2n for f_1..f_n; the extended pair is
// (2n+1, 2n+2). Elements of distinct algebras never mix.
struct Algebra {
    int n = 1;
    bool extended = false;

    int generators() const { return 2 * n + (extended ? 2 : 0); }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.n == b.n && a.extended == b.extended;
    }
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }
};

inline void check_algebra(const Algebra& a) {
    if (a.n < 1 || a.generators() > 62) throw std::invalid_argument("unsupported dimension");
}

inline void require_same(const Algebra& a, const Algebra& b) {
    if (a != b) throw std::invalid_argument("algebra mismatch");
}

// Sparse element of the complex Clifford algebra: blade -> nonzero coefficient.
class CliffordElement {
  public:
    explicit CliffordElement(Algebra alg = {}) : alg_(alg) { check_algebra(alg_); }

    static CliffordElement zero(Algebra alg) { return CliffordElement(alg); }

    static CliffordElement scalar(Algebra alg, GaussianRational c) {
        CliffordElement x(alg);
        x.add_term(0, std::move(c));
        return x;
    }

    static CliffordElement one(Algebra alg) { return scalar(alg, GaussianRational(1)); }

    static CliffordElement generator(Algebra alg, int g) {
        check_algebra(alg);
        if (g < 1 || g > alg.generators()) throw std::invalid_argument("generator index out of range");
        CliffordElement x(alg);
        x.add_term(Blade(1) << (g - 1), GaussianRational(1));
        return x;
    }

    const Algebra& algebra() const { return alg_; }
    const std::map<Blade, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True when no blade touches the two extended generators; such an element
    // is the image of a C_{2n} element under the canonical embedding.
    bool is_restricted() const {
        if (!alg_.extended) return true;
        Blade tail = Blade(3) << (2 * alg_.n);
        for (const auto& [b, c] : terms_)
            if (b & tail) return false;
        return true;
    }

    void add_term(Blade b, GaussianRational c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(b, std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussianRational coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    GaussianRational scalar_part() const { return coefficient(0); }

    CliffordElement operator-() const {
        CliffordElement r(alg_);
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
        return r;
    }

    CliffordElement& operator+=(const CliffordElement& o) {
        require_same(alg_, o.alg_);
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) {
        require_same(alg_, o.alg_);
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }

    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }

    friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
        require_same(x.alg_, y.alg_);
        CliffordElement r(x.alg_);
        for (const auto& [a, ca] : x.terms_)
            for (const auto& [b, cb] : y.terms_) {
                GaussianRational c = ca * cb;
                if (blade_mul_sign(a, b) < 0) c = -c;
                r.add_term(a ^ b, std::move(c));
            }
        return r;
    }

    friend CliffordElement operator*(const GaussianRational& s, const CliffordElement& x) {
        CliffordElement r(x.alg_);
        if (s.is_zero()) return r;
        for (const auto& [b, c] : x.terms_) r.add_term(b, s * c);
        return r;
    }
    friend CliffordElement operator*(const CliffordElement& x, const GaussianRational& s) { return s * x; }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        return a.alg_ == b.alg_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

  private:
    Algebra alg_;
    std::map<Blade, GaussianRational> terms_;
};

// Anti-involution fixed by bar(e_g) = -e_g; complex-linear. On a grade-k blade
// it acts as the sign (-1)^{k(k+1)/2}.
inline CliffordElement bar(const CliffordElement& x) {
    CliffordElement r(x.algebra());
    for (const auto& [b, c] : x.terms()) {
        int k = blade_grade(b);
        r.add_term(b, (k * (k + 1) / 2) % 2 ? -c : c);
    }
    return r;
}

// Hermitian conjugation: bar on blades, complex conjugation on coefficients.
inline CliffordElement dagger(const CliffordElement& x) {
    CliffordElement r(x.algebra());
    for (const auto& [b, c] : x.terms()) {
        int k = blade_grade(b);
        GaussianRational cc = c.conj();
        r.add_term(b, (k * (k + 1) / 2) % 2 ? -cc : cc);
    }
    return r;
}

// (x, y) = [dagger(x) y]_0.
inline GaussianRational hermitian_inner(const CliffordElement& x, const CliffordElement& y) {
    require_same(x.algebra(), y.algebra());
    GaussianRational acc;
    for (const auto& [b, cx] : x.terms()) {
        GaussianRational cy = y.coefficient(b);
        if (!cy.is_zero()) acc += cx.conj() * cy;  // dagger and the blade square cancel in sign
    }
    return acc;
}

// (x, x) as an exact rational; positive definite.
inline Rational norm_sq(const CliffordElement& x) {
    GaussianRational v = hermitian_inner(x, x);
    if (!v.is_real()) throw std::logic_error("inner square not real");
    return v.re;
}

namespace detail {
inline std::pair<int, int> witt_pair(const Algebra& alg, int j) {
    check_algebra(alg);
    if (j == 0) {
        if (!alg.extended) throw std::invalid_argument("index 0 needs the extended algebra");
        return {2 * alg.n + 1, 2 * alg.n + 2};
    }
    if (j < 1 || j > alg.n) throw std::invalid_argument("Witt index out of range");
    return {j, alg.n + j};
}
}  // namespace detail

// f_j = (e_a - i e_b)/2 over the generator pair (a, b) of direction j.
inline CliffordElement witt(Algebra alg, int j) {
    auto [a, b] = detail::witt_pair(alg, j);
    CliffordElement x(alg);
    x.add_term(Blade(1) << (a - 1), GaussianRational(rat(1, 2)));
    x.add_term(Blade(1) << (b - 1), GaussianRational(Rational(0), rat(-1, 2)));
    return x;
}

// f_j^dagger = -(e_a + i e_b)/2.
inline CliffordElement witt_dagger(Algebra alg, int j) {
    auto [a, b] = detail::witt_pair(alg, j);
    CliffordElement x(alg);
    x.add_term(Blade(1) << (a - 1), GaussianRational(rat(-1, 2)));
    x.add_term(Blade(1) << (b - 1), GaussianRational(Rational(0), rat(-1, 2)));
    return x;
}

// beta = sum_j f_j^dagger f_j over the z-directions 1..n only.
inline CliffordElement beta_element(Algebra alg) {
    CliffordElement acc(alg);
    for (int j = 1; j <= alg.n; ++j) acc += witt_dagger(alg, j) * witt(alg, j);
    return acc;
}

// I = f_1 f_1^dagger ... f_n f_n^dagger; primitive idempotent.
inline CliffordElement idempotent(Algebra alg) {
    CliffordElement acc = CliffordElement::one(alg);
    for (int j = 1; j <= alg.n; ++j) acc = acc * (witt(alg, j) * witt_dagger(alg, j));
    return acc;
}

// Canonical embedding C_{2n} -> C_{2n+2}: blades are unchanged.
inline CliffordElement embed(const CliffordElement& x) {
    if (x.algebra().extended) return x;
    CliffordElement r(Algebra{x.algebra().n, true});
    for (const auto& [b, c] : x.terms()) r.add_term(b, c);
    return r;
}

// Inverse of embed; rejects elements touching the extended generators.
inline CliffordElement restrict_algebra(const CliffordElement& x) {
    if (!x.algebra().extended) return x;
    if (!x.is_restricted()) throw std::invalid_argument("element touches the extended generators");
    CliffordElement r(Algebra{x.algebra().n, false});
    for (const auto& [b, c] : x.terms()) r.add_term(b, c);
    return r;
}

inline std::string blade_str(Blade b) {
    if (b == 0) return "1";
    std::string s;
    for (int g : blade_indices(b)) {
        if (!s.empty()) s += "^";
        s += "e" + std::to_string(g);
    }
    return s;
}

inline std::string clifford_str(const CliffordElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [b, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        s += "(" + gaussian_str(c) + ")";
        if (b != 0) s += "*" + blade_str(b);
    }
    return s;
}

}  // namespace hclif
