#include "hclif/hermite.hpp"

#include <stdexcept>

namespace hclif {

namespace {

Rational pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(1) / Rational(p) : Rational(p);
}

void check_hermite_args(int type, int p, int n) {
    if (type < 1 || type > 4) throw std::domain_error("type outside 1..4");
    if (p < 0) throw std::domain_error("negative degree index");
    if (n < 1) throw std::domain_error("dimension must be positive");
}

PolyFunction radial_poly(const std::vector<Rational>& coeffs, int n) {
    PolyFunction x(n, false);  // |z|^2 / 2
    for (int j = 1; j <= n; ++j)
        x.add_term(Monomial::var(Var::z(j)) * Monomial::var(Var::zbar(j)),
                   CliffordElement::scalar({n, false}, GaussianRational(rat(1, 2))));
    PolyFunction acc(n, false);
    PolyFunction pw = PolyFunction::one(n);
    for (const Rational& c : coeffs) {
        acc += GaussianRational(c) * pw;
        pw = pw * x;
    }
    return acc;
}

GaussianRational grat(Rational q) { return GaussianRational(std::move(q)); }

}  // namespace

std::vector<Rational> laguerre(int p, long alpha) {
    if (p < 0) throw std::domain_error("negative Laguerre degree");
    std::vector<Rational> c(p + 1);
    for (int i = 0; i <= p; ++i) {
        Rational b(1);
        for (int j = 1; j <= p - i; ++j) b *= Rational(alpha + i + j);
        b /= factorial(p - i);
        c[i] = Rational(parity_sign(i)) * b / factorial(i);
    }
    return c;
}

PolyFunction laguerre_at_half_norm(int p, long alpha, int n) {
    if (n < 1) throw std::domain_error("dimension must be positive");
    return radial_poly(laguerre(p, alpha), n);
}

PolyFunction hermite_rodrigues(int type, int p, int n) {
    check_hermite_args(type, p, n);
    PolyFunction g = PolyFunction::one(n).with_weight(Weight::gaussian);
    for (int i = 0; i < p; ++i) g = laplacian(g);
    switch (type) {
        case 1: g = dirac_zdagger(g); break;
        case 2: g = dirac_z(g); break;
        case 3: g = dirac_z(dirac_zdagger(g)); break;
        default: g = dirac_zdagger(dirac_z(g)); break;
    }
    return g.strip_weight();
}

PolyFunction hermite_closed_form(int type, int p, int n) {
    return hermite_closed_form(type, p, n, beta_element({n, false}));
}

PolyFunction hermite_closed_form(int type, int p, int n, const CliffordElement& beta_sub) {
    check_hermite_args(type, p, n);
    require_same(beta_sub.algebra(), Algebra{n, false});
    GaussianRational pref = grat(Rational(parity_sign(p - 1)) * pow2(p - 1) * factorial(p));
    PolyFunction Ln = laguerre_at_half_norm(p, n, n);
    PolyFunction zv = vector_var(n, false, VectorVar::z);
    PolyFunction zd = vector_var(n, false, VectorVar::zdagger);
    switch (type) {
        case 1: return pref * (zv * Ln);
        case 2: return pref * (zd * Ln);
        case 3: {
            PolyFunction Ln1 = laguerre_at_half_norm(p, n + 1, n);
            return pref * (left_mul(beta_sub, Ln) - grat(rat(1, 2)) * (zd * zv * Ln1));
        }
        default: {
            PolyFunction Ln1 = laguerre_at_half_norm(p, n + 1, n);
            CliffordElement nmb = CliffordElement::scalar({n, false}, GaussianRational(n)) - beta_sub;
            return pref * (left_mul(nmb, Ln) - grat(rat(1, 2)) * (zv * zd * Ln1));
        }
    }
}

GaussianCK gaussian_ck_coefficients(int k, int n) {
    if (k < 0) throw std::domain_error("negative series index");
    if (n < 1) throw std::domain_error("dimension must be positive");
    CliffordElement beta = beta_element({n, false});
    PolyFunction zv = vector_var(n, false, VectorVar::z);
    PolyFunction zd = vector_var(n, false, VectorVar::zdagger);
    PolyFunction Lk = laguerre_at_half_norm(k, n, n);

    GaussianRational cBC = grat(pow2(-k - 1) / factorial(k + 1));
    GaussianCK out{PolyFunction(n), PolyFunction(n), PolyFunction(n), PolyFunction(n)};
    out.B = cBC * (zd * Lk);
    out.C = cBC * (zv * Lk);
    if (k == 0) {
        out.A = PolyFunction::one(n);
        // D stays zero
    } else {
        PolyFunction Lk1n = laguerre_at_half_norm(k - 1, n, n);
        PolyFunction Lk1n1 = laguerre_at_half_norm(k - 1, n + 1, n);
        GaussianRational cAD = grat(pow2(-k) / (k * factorial(k)));
        out.A = cAD * (left_mul(beta, Lk1n) - grat(rat(1, 2)) * (zd * zv * Lk1n1));
        CliffordElement twobk =
            GaussianRational(2) * beta + CliffordElement::scalar({n, false}, GaussianRational(k));
        out.D = cAD * (GaussianRational(k) * Lk - left_mul(twobk, Lk1n) + zd * zv * Lk1n1);
    }
    out.A = out.A.with_weight(Weight::gaussian);
    out.B = out.B.with_weight(Weight::gaussian);
    out.C = out.C.with_weight(Weight::gaussian);
    out.D = out.D.with_weight(Weight::gaussian);
    return out;
}

GaussianCK gaussian_class2(int k, int s, int n) {
    if (k < 0) throw std::domain_error("negative series index");
    if (s < 1) throw std::domain_error("prefactor exponent below range");
    if (n < 1) throw std::domain_error("dimension must be positive");
    CliffordElement beta = beta_element({n, false});
    CliffordElement nmb = CliffordElement::scalar({n, false}, GaussianRational(n)) - beta;
    PolyFunction zv = vector_var(n, false, VectorVar::z);
    PolyFunction zd = vector_var(n, false, VectorVar::zdagger);
    PolyFunction Lk = laguerre_at_half_norm(k, n, n);
    Rational sm1 = factorial(s - 1);

    GaussianCK out{PolyFunction(n), PolyFunction(n), PolyFunction(n), PolyFunction(n)};
    out.A = grat(-pow2(-k - 1) * sm1 / factorial(s + k)) * (zd * Lk);
    out.B = grat(pow2(-k - 1) * factorial(s) / factorial(s + 1 + k)) * (zd * Lk);
    if (k == 0) {
        out.C = PolyFunction::one(n);
        out.D = PolyFunction::one(n);
    } else {
        PolyFunction Lk1n = laguerre_at_half_norm(k - 1, n, n);
        PolyFunction Lk1n1 = laguerre_at_half_norm(k - 1, n + 1, n);
        PolyFunction h4 = left_mul(nmb, Lk1n) - grat(rat(1, 2)) * (zv * zd * Lk1n1);
        out.C = grat(pow2(-k) * sm1 / (k * factorial(s + k - 1))) * h4;
        out.D = grat(pow2(-k - 1) * sm1 / factorial(s + k)) *
                (grat(Rational(2 * s, k)) * h4 + zd * Lk);
    }
    out.A = out.A.with_weight(Weight::gaussian);
    out.B = out.B.with_weight(Weight::gaussian);
    out.C = out.C.with_weight(Weight::gaussian);
    out.D = out.D.with_weight(Weight::gaussian);
    return out;
}

GaussianCK gaussian_class3(int k, int s, int n) {
    if (k < 0) throw std::domain_error("negative series index");
    if (s < 1) throw std::domain_error("prefactor exponent below range");
    if (n < 1) throw std::domain_error("dimension must be positive");
    CliffordElement beta = beta_element({n, false});
    PolyFunction zv = vector_var(n, false, VectorVar::z);
    PolyFunction zd = vector_var(n, false, VectorVar::zdagger);
    PolyFunction Lk = laguerre_at_half_norm(k, n, n);
    Rational sm1 = factorial(s - 1);

    GaussianCK out{PolyFunction(n), PolyFunction(n), PolyFunction(n), PolyFunction(n)};
    out.C = grat(pow2(-k - 1) * factorial(s) / factorial(s + k + 1)) * (zv * Lk);
    if (k == 0) {
        out.A = PolyFunction::one(n);
        out.B = PolyFunction::one(n);
        out.D = grat(Rational(-1)) *
                (grat(Rational(1, 2 * s)) * zv + PolyFunction::one(n));
    } else {
        PolyFunction Lk1n = laguerre_at_half_norm(k - 1, n, n);
        PolyFunction Lk1n1 = laguerre_at_half_norm(k - 1, n + 1, n);
        PolyFunction h3 = left_mul(beta, Lk1n) - grat(rat(1, 2)) * (zd * zv * Lk1n1);
        out.A = grat(pow2(-k) * factorial(s) / (k * factorial(s + k))) * h3;
        out.B = grat(pow2(-k) * sm1 / (k * factorial(s + k - 1))) * h3;
        out.D = grat(-pow2(-k - 1) * sm1 / factorial(s + k)) *
                (zv * Lk + grat(Rational(2 * s, k)) * h3);
    }
    out.A = out.A.with_weight(Weight::gaussian);
    out.B = out.B.with_weight(Weight::gaussian);
    out.C = out.C.with_weight(Weight::gaussian);
    out.D = out.D.with_weight(Weight::gaussian);
    return out;
}

}  // namespace hclif
