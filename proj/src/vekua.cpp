#include "hclif/vekua.hpp"

#include <algorithm>
#include <stdexcept>

namespace hclif {

namespace {

Rational rq(long v) { return Rational(v); }

void check_order(const NuSeries& s, int M, const char* what) {
    if (!s.is_zero() && s.top_exponent() > M)
        throw std::invalid_argument(std::string(what) + " exceeds the nu-order bound");
}

int common_n(std::initializer_list<const NuSeries*> xs) {
    int n = 0;
    for (const NuSeries* s : xs) {
        if (n == 0)
            n = s->n();
        else if (s->n() != n)
            throw std::invalid_argument("dimension mismatch in initial data");
    }
    return n;
}

// -((n+1) g' + nu g'') / denom, the common step for the b and c tables.
NuSeries radial_step(const NuSeries& g, int n, long denom) {
    NuSeries d1 = g.derivative();
    NuSeries d2 = d1.derivative();
    return -(rq(n + 1) * d1 + d2.shift(1)) / rq(denom);
}

struct BetaConstants {
    BetaPoly beta;       // beta
    BetaPoly cminus;     // beta - n - 1
    BetaPoly nminus;     // n - beta
    explicit BetaConstants(int n)
        : beta(BetaPoly::beta(n)),
          cminus(BetaPoly::beta(n) - BetaPoly::constant(n, rq(n + 1))),
          nminus(BetaPoly::constant(n, rq(n)) - BetaPoly::beta(n)) {}
};

}  // namespace

AxialSolution vekua_solve_plain(const NuSeries& a01, const NuSeries& a02,
                                const NuSeries& d01, const NuSeries& d02,
                                int K, int M) {
    if (K < 0 || M < 0) throw std::invalid_argument("truncation orders must be nonnegative");
    int n = common_n({&a01, &a02, &d01, &d02});
    check_order(a01, M, "a1 data");
    check_order(a02, M, "a2 data");
    check_order(d01, M, "d1 data");
    check_order(d02, M, "d2 data");
    BetaConstants bc(n);

    AxialSolution sol;
    sol.kind = AxialKind::plain;
    sol.s = 0;
    sol.n = n;
    sol.K = K;
    sol.M = M;
    sol.a1.assign(K + 1, NuSeries(n));
    sol.a2 = sol.b = sol.c = sol.d1 = sol.d2 = sol.a1;

    sol.a1[0] = a01;
    sol.a2[0] = a02;
    sol.d1[0] = d01;
    sol.d2[0] = d02;
    sol.c[0] = bc.cminus * a02 - a01.derivative() - a02.nu_derivative();
    sol.b[0] = bc.beta * (a02 + d02) - a01.derivative() - d01.derivative();
    for (int k = 1; k <= K; ++k) {
        sol.c[k] = radial_step(sol.c[k - 1], n, static_cast<long>(k) * (k + 1));
        sol.b[k] = radial_step(sol.b[k - 1], n, static_cast<long>(k) * (k + 1));
        sol.a1[k] = bc.beta * sol.c[k - 1] / rq(k);
        sol.a2[k] = sol.c[k - 1].derivative() / rq(k);
        sol.d1[k] = (bc.nminus * sol.b[k - 1] + sol.b[k - 1].nu_derivative() -
                     bc.beta * sol.c[k - 1]) /
                    rq(k);
        sol.d2[k] = -(sol.b[k - 1].derivative() + sol.c[k - 1].derivative()) / rq(k);
    }
    return sol;
}

AxialSolution generalized_powers(const Rational& s, const Rational& alpha1,
                                 const Rational& alpha2, const Rational& delta1,
                                 const Rational& delta2, int n, int K) {
    if (K < 0) throw std::invalid_argument("truncation orders must be nonnegative");
    if (n < 1) throw std::invalid_argument("dimension must be positive");
    BetaPoly beta = BetaPoly::beta(n);
    BetaPoly alpha_base = (alpha2 + delta2) * beta -
                          BetaPoly::constant(n, (alpha1 + delta1) * s);
    BetaPoly delta_base = alpha2 * beta -
                          BetaPoly::constant(n, alpha2 * rq(n) + (alpha2 + alpha1) * s);

    // scale(k) = (-1)^k prod_{l=1..k} (s-l)(n+s-l) / ((k+1)(k!)^2)
    std::vector<Rational> scale(K + 1);
    Rational acc(1);
    Rational kfac(1);
    for (int k = 0; k <= K; ++k) {
        if (k > 0) {
            acc *= -(s - rq(k)) * (rq(n) + s - rq(k));
            kfac *= rq(k);
        }
        scale[k] = acc / (rq(k + 1) * kfac * kfac);
    }
    auto alpha_k = [&](int k) { return scale[k] * alpha_base; };
    auto delta_k = [&](int k) { return scale[k] * delta_base; };

    AxialSolution sol;
    sol.kind = AxialKind::plain;
    sol.s = 0;
    sol.n = n;
    sol.K = K;
    {
        Rational top = std::max(s, Rational(0));
        mpz_class m;
        mpz_cdiv_q(m.get_mpz_t(), top.get_num().get_mpz_t(), top.get_den().get_mpz_t());
        sol.M = static_cast<int>(m.get_si());
    }
    sol.a1.assign(K + 1, NuSeries(n));
    sol.a2 = sol.b = sol.c = sol.d1 = sol.d2 = sol.a1;

    sol.a1[0] = NuSeries::monomial(n, BetaPoly::constant(n, alpha1), s);
    sol.a2[0] = NuSeries::monomial(n, BetaPoly::constant(n, alpha2), s - 1);
    sol.d1[0] = NuSeries::monomial(n, BetaPoly::constant(n, delta1), s);
    sol.d2[0] = NuSeries::monomial(n, BetaPoly::constant(n, delta2), s - 1);
    for (int k = 0; k <= K; ++k) {
        sol.b[k] = NuSeries::monomial(n, alpha_k(k), s - rq(k) - 1);
        sol.c[k] = NuSeries::monomial(n, delta_k(k), s - rq(k) - 1);
    }
    for (int k = 1; k <= K; ++k) {
        BetaPoly al = alpha_k(k - 1);
        BetaPoly de = delta_k(k - 1);
        sol.a1[k] = NuSeries::monomial(n, beta * de / rq(k), s - rq(k));
        sol.a2[k] = NuSeries::monomial(n, (s - rq(k)) / rq(k) * de, s - rq(k) - 1);
        sol.d1[k] = NuSeries::monomial(
            n, ((rq(n) + s - rq(k)) * al - beta * al - beta * de) / rq(k), s - rq(k));
        sol.d2[k] = NuSeries::monomial(n, -(s - rq(k)) / rq(k) * (al + de),
                                       s - rq(k) - 1);
    }
    return sol;
}

AxialSolution vekua_solve_z0power(const NuSeries& c0, const NuSeries& d01,
                                  const NuSeries& d02, int s, int K, int M) {
    if (s < 1) throw std::domain_error("prefactor exponent must be at least 1");
    if (K < 0 || M < 0) throw std::invalid_argument("truncation orders must be nonnegative");
    int n = common_n({&c0, &d01, &d02});
    check_order(c0, M, "c data");
    check_order(d01, M, "d1 data");
    check_order(d02, M, "d2 data");
    BetaConstants bc(n);

    AxialSolution sol;
    sol.kind = AxialKind::z0_power;
    sol.s = s;
    sol.n = n;
    sol.K = K;
    sol.M = M;
    sol.a1.assign(K + 1, NuSeries(n));
    sol.a2 = sol.b = sol.c = sol.d1 = sol.d2 = sol.a1;

    sol.c[0] = c0;
    for (int k = 1; k <= K; ++k)
        sol.c[k] = radial_step(sol.c[k - 1], n, static_cast<long>(k) * (k + s - 1));
    for (int k = 0; k <= K; ++k) {
        sol.a1[k] = bc.beta * sol.c[k] / rq(k + s);
        sol.a2[k] = sol.c[k].derivative() / rq(k + s);
    }
    sol.d1[0] = d01;
    sol.d2[0] = d02;
    sol.b[0] = (bc.beta * d02 - d01.derivative()) / rq(s + 1);
    for (int k = 1; k <= K; ++k) {
        sol.b[k] = radial_step(sol.b[k - 1], n, static_cast<long>(k) * (k + s + 1));
        sol.d1[k] = (bc.nminus * sol.b[k - 1] + sol.b[k - 1].nu_derivative()) / rq(k) -
                    bc.beta * sol.c[k] / rq(k + s);
        sol.d2[k] = -(sol.b[k - 1].derivative() / rq(k)) -
                    sol.c[k].derivative() / rq(k + s);
    }
    return sol;
}

AxialSolution vekua_solve_z0barpower(const NuSeries& a01, const NuSeries& a02,
                                     const NuSeries& b0, int s, int K, int M) {
    if (s < 1) throw std::domain_error("prefactor exponent must be at least 1");
    if (K < 0 || M < 0) throw std::invalid_argument("truncation orders must be nonnegative");
    int n = common_n({&a01, &a02, &b0});
    check_order(a01, M, "a1 data");
    check_order(a02, M, "a2 data");
    check_order(b0, M, "b data");
    BetaConstants bc(n);

    AxialSolution sol;
    sol.kind = AxialKind::z0bar_power;
    sol.s = s;
    sol.n = n;
    sol.K = K;
    sol.M = M;
    sol.a1.assign(K + 1, NuSeries(n));
    sol.a2 = sol.b = sol.c = sol.d1 = sol.d2 = sol.a1;

    sol.a1[0] = a01;
    sol.a2[0] = a02;
    sol.b[0] = b0;
    sol.c[0] = (bc.cminus * a02 - a01.derivative() - a02.nu_derivative()) / rq(s + 1);
    for (int k = 1; k <= K; ++k) {
        sol.c[k] = radial_step(sol.c[k - 1], n, static_cast<long>(k) * (k + s + 1));
        sol.b[k] = radial_step(sol.b[k - 1], n, static_cast<long>(k) * (k + s - 1));
        sol.a1[k] = bc.beta * sol.c[k - 1] / rq(k);
        sol.a2[k] = sol.c[k - 1].derivative() / rq(k);
    }
    for (int k = 0; k <= K; ++k) {
        sol.d1[k] = (bc.nminus * sol.b[k] + sol.b[k].nu_derivative()) / rq(k + s) -
                    sol.a1[k];
        sol.d2[k] = -(sol.b[k].derivative() / rq(k + s)) - sol.a2[k];
    }
    return sol;
}

AxialResidualReport axial_residuals(const AxialSolution& sol) {
    int n = sol.n;
    int K = sol.K;
    long s = sol.s;
    BetaConstants bc(n);
    AxialResidualReport rep;

    auto note = [&](const NuSeries& r, const char* sys, int eq, int k) {
        if (r.is_zero()) return;
        rep.all_zero = false;
        rep.nonzero.push_back(std::string(sys) + ".eq" + std::to_string(eq) + "[k=" +
                              std::to_string(k) + "]");
    };
    auto ad1 = [&](int k) { return sol.a1[k] + sol.d1[k]; };
    auto ad2 = [&](int k) { return sol.a2[k] + sol.d2[k]; };

    switch (sol.kind) {
        case AxialKind::plain:
            for (int k = 1; k <= K; ++k) {
                note(rq(k) * sol.a1[k] - bc.beta * sol.c[k - 1], "sys1", 1, k);
                note(rq(k) * sol.a2[k] - sol.c[k - 1].derivative(), "sys1", 2, k);
                note(rq(k) * ad1(k) - bc.nminus * sol.b[k - 1] -
                         sol.b[k - 1].nu_derivative(),
                     "sys2", 2, k);
                note(rq(k) * ad2(k) + sol.b[k - 1].derivative(), "sys2", 3, k);
            }
            for (int k = 0; k <= K; ++k) {
                note(rq(k + 1) * sol.c[k] + sol.a1[k].derivative() +
                         sol.a2[k].nu_derivative() - bc.cminus * sol.a2[k],
                     "sys1", 3, k);
                note(rq(k + 1) * sol.b[k] + ad1(k).derivative() - bc.beta * ad2(k),
                     "sys2", 1, k);
            }
            break;
        case AxialKind::z0_power:
            for (int k = 0; k <= K; ++k) {
                note(rq(k + s) * sol.a1[k] - bc.beta * sol.c[k], "sys1", 1, k);
                note(rq(k + s) * sol.a2[k] - sol.c[k].derivative(), "sys1", 2, k);
                note(ad1(k).derivative() + rq(k + s + 1) * sol.b[k] - bc.beta * ad2(k),
                     "sys2", 1, k);
            }
            for (int k = 0; k < K; ++k) {
                note(sol.a1[k].derivative() + sol.a2[k].nu_derivative() +
                         rq(k + 1) * sol.c[k + 1] - bc.cminus * sol.a2[k],
                     "sys1", 3, k);
                note(rq(k + 1) * ad1(k + 1) - bc.nminus * sol.b[k] -
                         sol.b[k].nu_derivative(),
                     "sys2", 2, k);
                note(rq(k + 1) * ad2(k + 1) + sol.b[k].derivative(), "sys2", 3, k);
            }
            break;
        case AxialKind::z0bar_power:
            for (int k = 0; k < K; ++k) {
                note(rq(k + 1) * sol.a1[k + 1] - bc.beta * sol.c[k], "sys1", 1, k);
                note(rq(k + 1) * sol.a2[k + 1] - sol.c[k].derivative(), "sys1", 2, k);
                note(ad1(k).derivative() + rq(k + 1) * sol.b[k + 1] - bc.beta * ad2(k),
                     "sys2", 1, k);
            }
            for (int k = 0; k <= K; ++k) {
                note(sol.a1[k].derivative() + sol.a2[k].nu_derivative() +
                         rq(k + s + 1) * sol.c[k] - bc.cminus * sol.a2[k],
                     "sys1", 3, k);
                note(rq(k + s) * ad1(k) - bc.nminus * sol.b[k] -
                         sol.b[k].nu_derivative(),
                     "sys2", 2, k);
                note(rq(k + s) * ad2(k) + sol.b[k].derivative(), "sys2", 3, k);
            }
            break;
    }
    return rep;
}

bool axial_terminated(const AxialSolution& sol) {
    if (sol.b.empty() || sol.c.empty()) return true;
    return sol.b[sol.K].is_zero() && sol.c[sol.K].is_zero();
}

namespace {

// Substitutes nu -> sum z_j zbar_j into one series and applies the Clifford
// vector factor on the left and the beta value on the right.
class Expander {
public:
    explicit Expander(int n)
        : n_(n),
          alg_{n, true},
          nu_(PolyFunction::zero(n, true)),
          powers_{PolyFunction::one(n, true)} {
        for (int j = 1; j <= n; ++j) {
            Monomial m = Monomial::var(Var::z(j)) * Monomial::var(Var::zbar(j));
            nu_.add_term(m, CliffordElement::one(alg_));
        }
    }

    const PolyFunction& nu_power(long e) {
        while (static_cast<long>(powers_.size()) <= e)
            powers_.push_back(powers_.back() * nu_);
        return powers_[e];
    }

    PolyFunction expand(const NuSeries& ns, const PolyFunction& pre) {
        PolyFunction out = PolyFunction::zero(n_, true);
        if (ns.is_zero()) return out;
        if (!ns.is_polynomial())
            throw std::domain_error("solution has non-polynomial exponents");
        long base = static_cast<long>(ns.offset().get_num().get_si());
        for (size_t m = 0; m < ns.coeffs().size(); ++m) {
            const BetaPoly& p = ns.coeffs()[m];
            if (p.is_zero()) continue;
            out += right_mul(pre * nu_power(base + static_cast<long>(m)),
                             p.evaluate(alg_));
        }
        return out;
    }

private:
    int n_;
    Algebra alg_;
    PolyFunction nu_;
    std::vector<PolyFunction> powers_;
};

}  // namespace

PolyFunction axial_expand(const AxialSolution& sol) {
    if (static_cast<int>(sol.a1.size()) != sol.K + 1 ||
        sol.a2.size() != sol.a1.size() || sol.b.size() != sol.a1.size() ||
        sol.c.size() != sol.a1.size() || sol.d1.size() != sol.a1.size() ||
        sol.d2.size() != sol.a1.size())
        throw std::invalid_argument("table sizes disagree with K");
    if (!axial_terminated(sol))
        throw std::domain_error("solution does not terminate within the table");

    int n = sol.n;
    Expander ex(n);
    PolyFunction one = PolyFunction::one(n, true);
    PolyFunction zvec = vector_var(n, true, VectorVar::z);
    PolyFunction zdvec = vector_var(n, true, VectorVar::zdagger);
    PolyFunction zdz = zdvec * zvec;

    // Extra z0 / zbar0 powers on top of the common nu0^k, per component.
    long az0 = 0, azb = 0, bz0 = 0, bzb = 0, cz0 = 0, czb = 0;
    if (sol.kind == AxialKind::z0_power) {
        az0 = sol.s;
        bz0 = sol.s + 1;
        cz0 = sol.s - 1;
    } else if (sol.kind == AxialKind::z0bar_power) {
        azb = sol.s;
        bzb = sol.s - 1;
        czb = sol.s + 1;
    } else {
        bz0 = 1;
        czb = 1;
    }

    auto monom = [](long pz0, long pzb) {
        Monomial m;
        if (pz0 > 0) m.exps[Var::z(0)] = static_cast<int>(pz0);
        if (pzb > 0) m.exps[Var::zbar(0)] = static_cast<int>(pzb);
        return m;
    };

    Decomposition d{PolyFunction::zero(n, true), PolyFunction::zero(n, true),
                    PolyFunction::zero(n, true), PolyFunction::zero(n, true)};
    for (int k = 0; k <= sol.K; ++k) {
        PolyFunction ak = ex.expand(sol.a1[k], one) + ex.expand(sol.a2[k], zdz);
        PolyFunction dk = ex.expand(sol.d1[k], one) + ex.expand(sol.d2[k], zdz);
        PolyFunction bk = ex.expand(sol.b[k], zdvec);
        PolyFunction ck = ex.expand(sol.c[k], zvec);
        d.A += mul_monomial(ak, monom(k + az0, k + azb));
        d.D += mul_monomial(dk, monom(k + az0, k + azb));
        d.B += mul_monomial(bk, monom(k + bz0, k + bzb));
        d.C += mul_monomial(ck, monom(k + cz0, k + czb));
    }
    return compose(d);
}

}  // namespace hclif
