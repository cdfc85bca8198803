#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hclif/clifford.hpp"

namespace hclif {

// Formal variable: z_j or zbar_j, j = 0..n. Index 0 exists only in the
// extended space. z_j and zbar_j are independent (no implicit conjugation).
struct Var {
    int code = 0;  // 2*index + (1 for the bar variant)

    static Var z(int j) { return {2 * j}; }
    static Var zbar(int j) { return {2 * j + 1}; }

    int index() const { return code / 2; }
    bool barred() const { return code % 2 != 0; }

    friend auto operator<=>(const Var&, const Var&) = default;
};

inline std::string var_str(Var v) {
    return (v.barred() ? "zbar" : "z") + std::to_string(v.index());
}

inline Var parse_var(const std::string& s) {
    bool barred = s.rfind("zbar", 0) == 0;
    std::string tail = barred ? s.substr(4) : (s.rfind('z', 0) == 0 ? s.substr(1) : "");
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad variable: '" + s + "'");
    int j = std::stoi(tail);
    return barred ? Var::zbar(j) : Var::z(j);
}

// Product of variable powers; exponents are strictly positive.
struct Monomial {
    std::map<Var, int> exps;

    static Monomial one() { return {}; }
    static Monomial var(Var v, int e = 1) {
        Monomial m;
        if (e > 0) m.exps[v] = e;
        return m;
    }

    int exponent(Var v) const {
        auto it = exps.find(v);
        return it == exps.end() ? 0 : it->second;
    }
    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps) {
            int t = (r.exps[v] += e);
            if (t == 0) r.exps.erase(v);
        }
        return r;
    }

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;
};

inline std::string monomial_str(const Monomial& m) {
    if (m.exps.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : m.exps) {
        if (!s.empty()) s += "*";
        s += var_str(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

enum class Weight { none, gaussian };

// Polynomial in z_j, zbar_j with Clifford coefficients, optionally carrying the
// implicit factor exp(-|z|^2/2), |z|^2 = sum_{j=1..n} z_j zbar_j. has_z0 opens
// the variables z_0, zbar_0 and moves the coefficients to C_{2n+2}.
class PolyFunction {
  public:
    explicit PolyFunction(int n = 1, bool has_z0 = false, Weight w = Weight::none)
        : n_(n), has_z0_(has_z0), weight_(w) {
        check_algebra(coeff_algebra());
    }

    static PolyFunction zero(int n, bool has_z0 = false, Weight w = Weight::none) {
        return PolyFunction(n, has_z0, w);
    }

    static PolyFunction constant(int n, bool has_z0, CliffordElement c, Weight w = Weight::none) {
        PolyFunction g(n, has_z0, w);
        g.add_term(Monomial::one(), std::move(c));
        return g;
    }

    static PolyFunction one(int n, bool has_z0 = false) {
        return constant(n, has_z0, CliffordElement::one(Algebra{n, has_z0}));
    }

    static PolyFunction variable(int n, bool has_z0, Var v) {
        PolyFunction g(n, has_z0, Weight::none);
        g.check_var(v);
        g.add_term(Monomial::var(v), CliffordElement::one(Algebra{n, has_z0}));
        return g;
    }

    int n() const { return n_; }
    bool has_z0() const { return has_z0_; }
    Weight weight() const { return weight_; }
    Algebra coeff_algebra() const { return Algebra{n_, has_z0_}; }
    const std::map<Monomial, CliffordElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void check_var(Var v) const {
        int j = v.index();
        if (j == 0 && !has_z0_) throw std::invalid_argument("z0 variable outside the extended space");
        if (j < 0 || j > n_) throw std::invalid_argument("variable index out of range");
    }

    void add_term(const Monomial& m, CliffordElement c) {
        require_same(c.algebra(), coeff_algebra());
        for (const auto& [v, e] : m.exps) {
            check_var(v);
            if (e <= 0) throw std::invalid_argument("nonpositive exponent");
        }
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        if (terms_.empty()) weight_ = Weight::none;
    }

    CliffordElement coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? CliffordElement::zero(coeff_algebra()) : it->second;
    }

    PolyFunction with_weight(Weight w) const {
        PolyFunction r = *this;
        r.weight_ = r.terms_.empty() ? Weight::none : w;
        return r;
    }

    // The polynomial factor with the weight flag dropped.
    PolyFunction strip_weight() const { return with_weight(Weight::none); }

    PolyFunction operator-() const {
        PolyFunction r(n_, has_z0_, weight_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    PolyFunction& operator+=(const PolyFunction& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (n_ != o.n_ || has_z0_ != o.has_z0_) throw std::invalid_argument("space mismatch");
        if (weight_ != o.weight_) throw std::invalid_argument("weight mismatch");
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolyFunction& operator-=(const PolyFunction& o) { return *this += -o; }

    friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
    friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }

    friend PolyFunction operator*(const PolyFunction& x, const PolyFunction& y) {
        if (x.n_ != y.n_ || x.has_z0_ != y.has_z0_) throw std::invalid_argument("space mismatch");
        if (x.weight_ == Weight::gaussian && y.weight_ == Weight::gaussian)
            throw std::invalid_argument("product of two weighted functions");
        Weight w = (x.weight_ == Weight::gaussian || y.weight_ == Weight::gaussian)
                       ? Weight::gaussian
                       : Weight::none;
        PolyFunction r(x.n_, x.has_z0_, w);
        for (const auto& [ma, ca] : x.terms_)
            for (const auto& [mb, cb] : y.terms_) r.add_term(ma * mb, ca * cb);
        if (r.terms_.empty()) r.weight_ = Weight::none;
        return r;
    }

    friend PolyFunction operator*(const GaussianRational& s, const PolyFunction& x) {
        PolyFunction r(x.n_, x.has_z0_, x.weight_);
        if (s.is_zero()) return PolyFunction(x.n_, x.has_z0_);
        for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend PolyFunction operator*(const PolyFunction& x, const GaussianRational& s) { return s * x; }

    friend bool operator==(const PolyFunction& a, const PolyFunction& b) {
        if (a.n_ != b.n_ || a.has_z0_ != b.has_z0_) return false;
        if (a.terms_.empty() && b.terms_.empty()) return true;  // weight of zero is immaterial
        return a.weight_ == b.weight_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PolyFunction& a, const PolyFunction& b) { return !(a == b); }

  private:
    int n_;
    bool has_z0_;
    Weight weight_;
    std::map<Monomial, CliffordElement> terms_;
};

// Left multiplication by a Clifford constant.
inline PolyFunction left_mul(const CliffordElement& a, const PolyFunction& g) {
    require_same(a.algebra(), g.coeff_algebra());
    PolyFunction r(g.n(), g.has_z0(), g.weight());
    for (const auto& [m, c] : g.terms()) r.add_term(m, a * c);
    return r;
}

inline PolyFunction right_mul(const PolyFunction& g, const CliffordElement& a) {
    require_same(a.algebra(), g.coeff_algebra());
    PolyFunction r(g.n(), g.has_z0(), g.weight());
    for (const auto& [m, c] : g.terms()) r.add_term(m, c * a);
    return r;
}

inline PolyFunction mul_monomial(const PolyFunction& g, const Monomial& m) {
    PolyFunction r(g.n(), g.has_z0(), g.weight());
    for (const auto& [t, c] : g.terms()) r.add_term(t * m, c);
    return r;
}

// d/dv. On a weighted function the implicit factor differentiates too:
// d/dz_j adds -1/2 zbar_j g and d/dzbar_j adds -1/2 z_j g (j >= 1);
// z_0 derivatives never touch the weight.
inline PolyFunction partial(const PolyFunction& g, Var v) {
    g.check_var(v);
    PolyFunction r(g.n(), g.has_z0(), g.weight());
    for (const auto& [m, c] : g.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial d = m;
        if (e == 1)
            d.exps.erase(v);
        else
            d.exps[v] = e - 1;
        r.add_term(d, GaussianRational(Rational(e)) * c);
    }
    if (g.weight() == Weight::gaussian && v.index() >= 1) {
        Var partner = v.barred() ? Var::z(v.index()) : Var::zbar(v.index());
        for (const auto& [m, c] : g.terms())
            r.add_term(m * Monomial::var(partner), GaussianRational(rat(-1, 2)) * c);
    }
    return r;
}

// d_z g = sum_j f_j^dagger d/dz_j g over j = 1..n.
inline PolyFunction dirac_z(const PolyFunction& g) {
    PolyFunction r(g.n(), g.has_z0(), g.weight());
    for (int j = 1; j <= g.n(); ++j)
        r += left_mul(witt_dagger(g.coeff_algebra(), j), partial(g, Var::z(j)));
    return r;
}

// d_z^dagger g = sum_j f_j d/dzbar_j g.
inline PolyFunction dirac_zdagger(const PolyFunction& g) {
    PolyFunction r(g.n(), g.has_z0(), g.weight());
    for (int j = 1; j <= g.n(); ++j)
        r += left_mul(witt(g.coeff_algebra(), j), partial(g, Var::zbar(j)));
    return r;
}

// Delta = 4 (d_z d_z^dagger + d_z^dagger d_z); scalar second order.
inline PolyFunction laplacian(const PolyFunction& g) {
    PolyFunction r = dirac_z(dirac_zdagger(g)) + dirac_zdagger(dirac_z(g));
    return GaussianRational(4) * r;
}

enum class VectorVar { z, zdagger, x };

// z = sum f_j z_j, zdagger = sum f_j^dagger zbar_j, x = z - zdagger.
inline PolyFunction vector_var(int n, bool has_z0, VectorVar which) {
    PolyFunction r(n, has_z0);
    Algebra alg{n, has_z0};
    for (int j = 1; j <= n; ++j) {
        if (which != VectorVar::zdagger)
            r.add_term(Monomial::var(Var::z(j)), witt(alg, j));
        if (which != VectorVar::z) {
            CliffordElement c = witt_dagger(alg, j);
            r.add_term(Monomial::var(Var::zbar(j)),
                       which == VectorVar::x ? -c : c);
        }
    }
    return r;
}

// Restriction to z_0 = zbar_0 = 0. Falls back to the plain space when no
// blade touches the extended generators any more.
inline PolyFunction restrict_z0(const PolyFunction& g) {
    bool extended_coeff = false;
    std::map<Monomial, CliffordElement> kept;
    for (const auto& [m, c] : g.terms()) {
        if (m.exponent(Var::z(0)) > 0 || m.exponent(Var::zbar(0)) > 0) continue;
        kept.emplace(m, c);
        if (!c.is_restricted()) extended_coeff = true;
    }
    PolyFunction r(g.n(), extended_coeff, kept.empty() ? Weight::none : g.weight());
    for (const auto& [m, c] : kept)
        r.add_term(m, extended_coeff ? c : restrict_algebra(c));
    return r;
}

// Re-types a plain-space function into the extended space; blades unchanged.
inline PolyFunction embed_z0(const PolyFunction& g) {
    if (g.has_z0()) return g;
    PolyFunction r(g.n(), true, g.weight());
    for (const auto& [m, c] : g.terms()) r.add_term(m, embed(c));
    return r;
}

inline std::string poly_str(const PolyFunction& g) {
    if (g.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : g.terms()) {
        if (!s.empty()) s += " + ";
        s += "[" + clifford_str(c) + "]*" + monomial_str(m);
    }
    if (g.weight() == Weight::gaussian) s += " (gaussian)";
    return s;
}

}  // namespace hclif
