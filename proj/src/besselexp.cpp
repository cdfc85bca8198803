#include "hclif/besselexp.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hclif {

double bessel_series(int alpha, BesselKind kind, double t) {
    if (alpha < 0) throw std::domain_error("order must be nonnegative");
    long double half = static_cast<long double>(t) / 2.0L;
    long double term = 1.0L;
    for (int i = 1; i <= alpha; ++i) term *= half / i;  // (t/2)^alpha / alpha!
    long double ratio_base = (kind == BesselKind::J ? -1.0L : 1.0L) * half * half;
    long double sum = 0.0L;
    for (int k = 0; k < 500; ++k) {
        sum += term;
        term *= ratio_base / ((k + 1.0L) * (k + 1.0L + alpha));
        long double mag = std::fabs(term);
        if (mag < 1e-16L * std::fabs(sum) || mag < 1e-300L) break;
    }
    return static_cast<double>(sum);
}

std::vector<Rational> scaled_bessel_coeffs(int order, const Rational& a, int M) {
    if (order < 0) throw std::domain_error("order must be nonnegative");
    if (M < 0) throw std::invalid_argument("truncation order must be nonnegative");
    std::vector<Rational> c(M + 1);
    Rational cur(1);
    cur /= factorial(order);
    for (int k = 0; k <= M; ++k) {
        c[k] = cur;
        cur *= -a;
        cur /= Rational(static_cast<long>(k + 1) * (k + 1 + order));
    }
    return c;
}

PrefactorSeries scaled_bessel_nuseries(int order, const Rational& a, int M, int dim) {
    if (dim == 0) dim = std::max(order, 1);
    std::vector<Rational> raw = scaled_bessel_coeffs(order, a, M);
    std::vector<BetaPoly> coeffs;
    coeffs.reserve(raw.size());
    for (const Rational& r : raw) coeffs.push_back(BetaPoly::constant(dim, r));
    PrefactorSeries out;
    out.prefactor = SeriesPrefactor{a, order};
    out.series = NuSeries::from_coeffs(dim, std::move(coeffs));
    return out;
}

ExpSolution exp_solution(const ExpParams& p, int M) {
    if (p.lambda == 0 || p.mu == 0)
        throw std::domain_error("lambda and mu must be nonzero");
    if (p.n < 1) throw std::invalid_argument("dimension must be positive");
    if (M < 0) throw std::invalid_argument("truncation order must be nonnegative");

    int n = p.n;
    Rational lm = p.lambda * p.mu;
    PrefactorSeries S = scaled_bessel_nuseries(n, lm, M, n);
    BetaPoly beta = BetaPoly::beta(n);
    BetaPoly nminus = BetaPoly::constant(n, Rational(n)) - beta;

    ExpSolution sol;
    sol.params = p;
    sol.M = M;
    sol.prefactor = S.prefactor;
    sol.b = p.alpha1 * S.series;
    sol.c = p.alpha2 * S.series;
    sol.a1 = beta * sol.c / p.lambda;
    sol.a2 = sol.c.derivative() / p.lambda;
    sol.d2 = -(sol.b.derivative() / p.mu) - sol.a2;
    sol.d1 = nminus * sol.b / p.mu - beta * sol.c / p.lambda -
             (sol.a2 + sol.d2).shift(1);
    return sol;
}

ExpResiduals exp_residuals(const ExpSolution& sol) {
    const ExpParams& p = sol.params;
    int n = p.n;
    Rational lm = p.lambda * p.mu;
    BetaPoly beta = BetaPoly::beta(n);
    BetaPoly cminus = beta - BetaPoly::constant(n, Rational(n + 1));
    BetaPoly nminus = BetaPoly::constant(n, Rational(n)) - beta;
    NuSeries ad1 = sol.a1 + sol.d1;
    NuSeries ad2 = sol.a2 + sol.d2;

    ExpResiduals r;
    r.eq1 = sol.a1 - beta * sol.c / p.lambda;
    r.eq2 = sol.a2 - sol.c.derivative() / p.lambda;
    r.eq3 = sol.a1.derivative() + sol.a2.nu_derivative() + p.mu * sol.c -
            cminus * sol.a2;
    r.eq4 = ad1.derivative() + p.lambda * sol.b - beta * ad2;
    r.eq5 = ad1 - (nminus * sol.b + sol.b.nu_derivative()) / p.mu;
    r.eq6 = ad2 + sol.b.derivative() / p.mu;
    auto ode = [&](const NuSeries& g) {
        return g.derivative().derivative().shift(1) +
               Rational(n + 1) * g.derivative() + lm * g;
    };
    r.ode_b = ode(sol.b);
    r.ode_c = ode(sol.c);
    return r;
}

bool residual_vanishes_to(const NuSeries& r, int order) {
    for (int e = 0; e <= order; ++e)
        if (!r.coeff_at(Rational(e)).is_zero()) return false;
    if (!r.is_zero() && r.offset() < 0) return false;
    return true;
}

bool exp_residuals_vanish_to(const ExpResiduals& r, int order) {
    return residual_vanishes_to(r.eq1, order) && residual_vanishes_to(r.eq2, order) &&
           residual_vanishes_to(r.eq3, order) && residual_vanishes_to(r.eq4, order) &&
           residual_vanishes_to(r.eq5, order) && residual_vanishes_to(r.eq6, order) &&
           residual_vanishes_to(r.ode_b, order) && residual_vanishes_to(r.ode_c, order);
}

DerivativeIdentityReport bessel_derivative_identity_check(int order, const Rational& a,
                                                          int M) {
    std::vector<Rational> lo = scaled_bessel_coeffs(order, a, M);
    std::vector<Rational> hi = scaled_bessel_coeffs(order + 1, a, M);
    DerivativeIdentityReport rep;
    for (int k = 0; k + 1 <= M; ++k) {
        Rational lhs = Rational(k + 1) * lo[k + 1];  // coefficient of nu^k in d/dnu
        Rational rhs = -a * hi[k];
        ++rep.checked;
        if (lhs != rhs) {
            rep.all_match = false;
            rep.mismatched.push_back(k);
        }
    }
    return rep;
}

}  // namespace hclif
