#include "hclif/ck.hpp"

#include <stdexcept>

namespace hclif {

namespace {

void require_extended(const PolyFunction& f) {
    if (!f.has_z0()) throw std::invalid_argument("function must live in the extended space");
}

// A plain-space input for a series solver; zero functions pass regardless of
// their weight flag.
void require_plain(const PolyFunction& g) {
    if (g.has_z0()) throw std::invalid_argument("initial data must be z_0-free");
}

Weight joint_weight(const PolyFunction& a, const PolyFunction& b) {
    if (a.is_zero()) return b.weight();
    if (b.is_zero()) return a.weight();
    if (a.weight() != b.weight()) throw std::invalid_argument("weight mismatch");
    return a.weight();
}

GaussianRational grat(Rational q) { return GaussianRational(std::move(q)); }

}  // namespace

Decomposition decompose(const PolyFunction& f) {
    require_extended(f);
    int n = f.n();
    Algebra ext{n, true};
    Blade lo = Blade(1) << (2 * n);      // first extended generator
    Blade hi = Blade(1) << (2 * n + 1);  // second extended generator
    Decomposition d{PolyFunction(n, true, f.weight()), PolyFunction(n, true, f.weight()),
                    PolyFunction(n, true, f.weight()), PolyFunction(n, true, f.weight())};
    const GaussianRational iu = GaussianRational::i();
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [b, g] : c.terms()) {
            Blade base = b & ~(lo | hi);
            bool odd = blade_grade(base) % 2 != 0;
            CliffordElement e(ext);
            e.add_term(base, g);
            switch (((b & lo) ? 1 : 0) | ((b & hi) ? 2 : 0)) {
                case 0:  // plain blade
                    d.A.add_term(m, e);
                    break;
                case 1:  // base * e_lo, e_lo = f_0 - f_0^dagger
                    d.B.add_term(m, odd ? -e : e);
                    d.C.add_term(m, odd ? e : -e);
                    break;
                case 2:  // base * e_hi, e_hi = i (f_0 + f_0^dagger)
                    d.B.add_term(m, iu * (odd ? -e : e));
                    d.C.add_term(m, iu * (odd ? -e : e));
                    break;
                case 3:  // base * e_lo e_hi = base * (i - 2 i f_0^dagger f_0)
                    d.A.add_term(m, iu * e);
                    d.D.add_term(m, GaussianRational(-2) * iu * e);
                    break;
            }
        }
    }
    return d;
}

PolyFunction compose(const Decomposition& d) {
    const PolyFunction& A = d.A;
    require_extended(A);
    Algebra ext = A.coeff_algebra();
    CliffordElement f0 = witt(ext, 0), f0d = witt_dagger(ext, 0);
    return d.A + left_mul(f0, d.B) + left_mul(f0d, d.C) + left_mul(f0d * f0, d.D);
}

std::pair<PolyFunction, PolyFunction> residuals_hmonogenic(const PolyFunction& f) {
    require_extended(f);
    Algebra ext = f.coeff_algebra();
    CliffordElement f0 = witt(ext, 0), f0d = witt_dagger(ext, 0);
    PolyFunction r1 = left_mul(f0d, partial(f, Var::z(0))) + dirac_z(f);
    PolyFunction r2 = left_mul(f0, partial(f, Var::zbar(0))) + dirac_zdagger(f);
    return {r1, r2};
}

std::pair<PolyFunction, PolyFunction> residuals_submonogenic(const PolyFunction& f) {
    require_extended(f);
    Algebra ext = f.coeff_algebra();
    CliffordElement f0 = witt(ext, 0), f0d = witt_dagger(ext, 0);
    PolyFunction s1 = left_mul(f0d, partial(f, Var::z(0))) + left_mul(f0d * f0, dirac_z(f));
    PolyFunction s2 = left_mul(f0, partial(f, Var::zbar(0))) + left_mul(f0 * f0d, dirac_zdagger(f));
    return {s1, s2};
}

ResidualQuad residuals_hmsF(const PolyFunction& f) {
    require_extended(f);
    Algebra ext = f.coeff_algebra();
    CliffordElement f0 = witt(ext, 0), f0d = witt_dagger(ext, 0);
    auto [s1, s2] = residuals_submonogenic(f);
    return {s1, left_mul(f0 * f0d, dirac_z(f)), s2, left_mul(f0d * f0, dirac_zdagger(f))};
}

std::pair<PolyFunction, PolyFunction> inhomogeneous_data(const PolyFunction& f) {
    require_extended(f);
    Algebra ext = f.coeff_algebra();
    return {left_mul(witt_dagger(ext, 0), dirac_z(f)), left_mul(witt(ext, 0), dirac_zdagger(f))};
}

ComponentResiduals component_residuals(const Decomposition& d) {
    PolyFunction AD = d.A + d.D;
    return {partial(d.A, Var::z(0)) - dirac_z(d.C),
            dirac_zdagger(d.A) + partial(d.C, Var::zbar(0)),
            partial(d.B, Var::z(0)) + dirac_z(AD),
            dirac_zdagger(d.B) - partial(AD, Var::zbar(0))};
}

namespace {

// Iterated operator kernels. next(g) is one of d_z d_z^dagger, d_z^dagger d_z.
std::vector<PolyFunction> power_chain(const PolyFunction& g0, int count, bool z_first) {
    std::vector<PolyFunction> out;
    out.reserve(count + 1);
    out.push_back(g0);
    for (int k = 1; k <= count; ++k) {
        const PolyFunction& prev = out.back();
        out.push_back(z_first ? dirac_z(dirac_zdagger(prev)) : dirac_zdagger(dirac_z(prev)));
    }
    return out;
}

void validate_series_args(const PolyFunction& x, const PolyFunction& y, int K, int s_min, int s) {
    require_plain(x);
    require_plain(y);
    if (x.n() != y.n()) throw std::invalid_argument("dimension mismatch");
    if (K < 0) throw std::invalid_argument("negative truncation");
    if (s < s_min) throw std::invalid_argument("prefactor exponent below range");
}

}  // namespace

CKTable ck_class1(const PolyFunction& A0, const PolyFunction& D0, int K) {
    validate_series_args(A0, D0, K, 0, 0);
    Weight w = joint_weight(A0, D0);
    int n = A0.n();
    CKTable t{CKClass::one, 0, K, n, false, {}, {}, {}, {}};

    // P_k = (d_z d_zd)^k A0, S_k = (d_zd d_z)^k A0, R_k = (d_zd d_z)^k D0.
    auto P = power_chain(A0, K + 1, true);
    auto S = power_chain(A0, K + 1, false);
    auto R = power_chain(D0.is_zero() ? PolyFunction::zero(n, false, w) : D0, K + 1, false);

    for (int k = 0; k <= K; ++k) {
        Rational kfac2 = factorial(k) * factorial(k);
        GaussianRational ak = grat(Rational(parity_sign(k)) / kfac2);
        GaussianRational ck = grat(Rational(parity_sign(k + 1)) / ((k + 1) * kfac2));
        t.A.push_back(k == 0 ? A0 : ak * P[k]);
        t.C.push_back(ck * dirac_zdagger(P[k]));
        t.B.push_back(ck * dirac_z(S[k] + R[k]));
        t.D.push_back(k == 0 ? D0 : ak * (R[k] + S[k] - P[k]));
    }
    t.terminated = P[K + 1].is_zero() && (S[K + 1] + R[K + 1]).is_zero();
    return t;
}

CKTable ck_class2(const PolyFunction& C0, const PolyFunction& D0, int s, int K) {
    validate_series_args(C0, D0, K, 1, s);
    joint_weight(C0, D0);
    int n = C0.n();
    CKTable t{CKClass::two, s, K, n, false, {}, {}, {}, {}};

    auto U = power_chain(C0, K + 1, false);  // (d_zd d_z)^k C0
    auto V = power_chain(D0.is_zero() ? PolyFunction::zero(n, false, C0.weight()) : D0, K + 1,
                         false);  // (d_zd d_z)^k D0

    Rational sm1 = factorial(s - 1);
    for (int k = 0; k <= K; ++k) {
        Rational kf = factorial(k);
        int sg = parity_sign(k);
        PolyFunction dzU = dirac_z(U[k]);
        t.A.push_back(grat(Rational(sg) * sm1 / (kf * factorial(s + k))) * dzU);
        t.C.push_back(k == 0 ? C0 : grat(Rational(sg) * sm1 / (kf * factorial(s - 1 + k))) * U[k]);
        t.B.push_back(grat(Rational(-sg) * factorial(s) / (kf * factorial(s + 1 + k))) *
                      dirac_z(V[k]));
        t.D.push_back(k == 0 ? D0
                             : grat(Rational(sg) * sm1 / (kf * factorial(s + k))) *
                                   (GaussianRational(s) * V[k] - dzU));
    }
    t.terminated = U[K + 1].is_zero() && V[K + 1].is_zero();
    return t;
}

CKTable ck_class3(const PolyFunction& A0, const PolyFunction& B0, int s, int K) {
    validate_series_args(A0, B0, K, 1, s);
    joint_weight(A0, B0);
    int n = A0.n();
    CKTable t{CKClass::three, s, K, n, false, {}, {}, {}, {}};

    auto P = power_chain(A0, K + 1, true);  // (d_z d_zd)^k A0
    auto T = power_chain(B0.is_zero() ? PolyFunction::zero(n, false, A0.weight()) : B0, K + 1,
                         true);  // (d_z d_zd)^k B0

    Rational sm1 = factorial(s - 1);
    Rational sf = factorial(s);
    for (int k = 0; k <= K; ++k) {
        Rational kf = factorial(k);
        int sg = parity_sign(k);
        t.A.push_back(k == 0 ? A0 : grat(Rational(sg) * sf / (kf * factorial(s + k))) * P[k]);
        t.C.push_back(grat(Rational(-sg) * sf / (kf * factorial(s + k + 1))) *
                      dirac_zdagger(P[k]));
        t.B.push_back(k == 0 ? B0
                             : grat(Rational(sg) * sm1 / (kf * factorial(s + k - 1))) * T[k]);
        t.D.push_back(grat(Rational(sg) * sm1 / (kf * factorial(s + k))) *
                      (dirac_zdagger(T[k]) - GaussianRational(s) * P[k]));
    }
    t.terminated = P[K + 1].is_zero() && T[K + 1].is_zero();
    return t;
}

PolyFunction assemble(const CKTable& t) {
    int n = t.n;
    // Radial prefactor exponents (z_0 power, zbar_0 power) at series index k.
    auto pref = [&](int k, char family) -> Monomial {
        int zp = k, zbp = k;
        switch (t.cls) {
            case CKClass::one:
                if (family == 'B') zp += 1;
                if (family == 'C') zbp += 1;
                break;
            case CKClass::two:
                zp += t.s;
                if (family == 'B') zp += 1;
                if (family == 'C') zp -= 1;
                break;
            case CKClass::three:
                zbp += t.s;
                if (family == 'B') zbp -= 1;
                if (family == 'C') zbp += 1;
                break;
        }
        Monomial m;
        if (zp > 0) m.exps[Var::z(0)] = zp;
        if (zbp > 0) m.exps[Var::zbar(0)] = zbp;
        return m;
    };
    Decomposition d{PolyFunction(n, true), PolyFunction(n, true), PolyFunction(n, true),
                    PolyFunction(n, true)};
    for (int k = 0; k <= t.K; ++k) {
        d.A += mul_monomial(embed_z0(t.A[k]), pref(k, 'A'));
        d.B += mul_monomial(embed_z0(t.B[k]), pref(k, 'B'));
        d.C += mul_monomial(embed_z0(t.C[k]), pref(k, 'C'));
        d.D += mul_monomial(embed_z0(t.D[k]), pref(k, 'D'));
    }
    return compose(d);
}

CKDoubleTable ck_double(const std::vector<PolyFunction>& A0row,
                        const std::vector<PolyFunction>& B0row,
                        const std::vector<PolyFunction>& Ccol,
                        const std::vector<PolyFunction>& Dcol) {
    if (A0row.empty() || A0row.size() != B0row.size() || A0row.size() != Ccol.size() ||
        A0row.size() != Dcol.size())
        throw std::invalid_argument("boundary families must share one length");
    int K = static_cast<int>(A0row.size()) - 1;
    int n = A0row[0].n();
    Weight w = Weight::none;
    bool weighted_seen = false;
    for (auto* fam : {&A0row, &B0row, &Ccol, &Dcol})
        for (const auto& g : *fam) {
            require_plain(g);
            if (g.n() != n) throw std::invalid_argument("dimension mismatch");
            if (g.is_zero()) continue;
            if (weighted_seen && g.weight() != w) throw std::invalid_argument("weight mismatch");
            w = g.weight();
            weighted_seen = true;
        }

    CKDoubleTable t;
    t.K = K;
    t.n = n;
    auto blank = std::vector<std::vector<PolyFunction>>(
        K + 1, std::vector<PolyFunction>(K + 1, PolyFunction::zero(n)));
    t.A = blank;
    t.B = blank;
    t.C = blank;
    t.D = blank;

    // Column seeds: A_{k,0} = (1/k) d_z C_{k-1,0} for k >= 1.
    std::vector<PolyFunction> Acol(K + 1, PolyFunction::zero(n));
    Acol[0] = A0row[0];
    for (int k = 1; k <= K; ++k)
        Acol[k] = grat(Rational(1, k)) * dirac_z(Ccol[k - 1]);
    std::vector<PolyFunction> Ecol(K + 1, PolyFunction::zero(n));  // (A+D)_{k,0}
    for (int k = 0; k <= K; ++k) Ecol[k] = Acol[k] + Dcol[k];

    // Operator powers of every boundary entry, up to what the table reaches.
    std::vector<std::vector<PolyFunction>> powA, powB, powC, powE;
    for (int j = 0; j <= K; ++j) {
        powA.push_back(power_chain(A0row[j], K, true));   // (d_z d_zd)^k A_{0,j}
        powB.push_back(power_chain(B0row[j], K, true));   // (d_z d_zd)^k B_{0,j}
        powC.push_back(power_chain(Ccol[j], K, false));   // (d_zd d_z)^l C_{j,0}
        powE.push_back(power_chain(Ecol[j], K, false));   // (d_zd d_z)^l (A+D)_{j,0}
    }

    auto frac = [](int sign, long num_fact, long k, long l) {
        return grat(Rational(sign) * factorial(num_fact) / (factorial(k) * factorial(l)));
    };

    for (int k = 0; k <= K; ++k)
        for (int l = 0; l <= K; ++l) {
            // A
            if (k == 0)
                t.A[k][l] = A0row[l];
            else if (k <= l)
                t.A[k][l] = frac(parity_sign(k), l - k, k, l) * powA[l - k][k];
            else
                t.A[k][l] = frac(parity_sign(l), k - 1 - l, k, l) * dirac_z(powC[k - 1 - l][l]);
            // C
            if (l == 0)
                t.C[k][l] = Ccol[k];
            else if (k < l)
                t.C[k][l] =
                    frac(parity_sign(k + 1), l - 1 - k, k, l) * dirac_zdagger(powA[l - 1 - k][k]);
            else
                t.C[k][l] = frac(parity_sign(l), k - l, k, l) * powC[k - l][l];
            // B
            if (k == 0)
                t.B[k][l] = B0row[l];
            else if (k <= l)
                t.B[k][l] = frac(parity_sign(k), l - k, k, l) * powB[l - k][k];
            else
                t.B[k][l] =
                    frac(parity_sign(l + 1), k - 1 - l, k, l) * dirac_z(powE[k - 1 - l][l]);
            // D via (A+D)
            if (l == 0) {
                t.D[k][l] = Dcol[k];
            } else {
                PolyFunction E = (k < l) ? frac(parity_sign(k), l - 1 - k, k, l) *
                                               dirac_zdagger(powB[l - 1 - k][k])
                                         : frac(parity_sign(l), k - l, k, l) * powE[k - l][l];
                t.D[k][l] = E - t.A[k][l];
            }
        }
    return t;
}

PolyFunction assemble(const CKDoubleTable& t) {
    Decomposition d{PolyFunction(t.n, true), PolyFunction(t.n, true), PolyFunction(t.n, true),
                    PolyFunction(t.n, true)};
    for (int k = 0; k <= t.K; ++k)
        for (int l = 0; l <= t.K; ++l) {
            Monomial m;
            if (k > 0) m.exps[Var::z(0)] = k;
            if (l > 0) m.exps[Var::zbar(0)] = l;
            d.A += mul_monomial(embed_z0(t.A[k][l]), m);
            d.B += mul_monomial(embed_z0(t.B[k][l]), m);
            d.C += mul_monomial(embed_z0(t.C[k][l]), m);
            d.D += mul_monomial(embed_z0(t.D[k][l]), m);
        }
    return compose(d);
}

}  // namespace hclif
