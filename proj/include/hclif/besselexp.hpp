#pragma once

#include <vector>

#include "hclif/betapoly.hpp"

namespace hclif {

enum class BesselKind { J, I };

// Numeric J_alpha(t) or I_alpha(t) by direct series summation, stopping once
// the next term falls below 1e-16 of the partial sum (absolute floor 1e-300).
double bessel_series(int alpha, BesselKind kind, double t);

// base^(half_power/2), kept symbolic so every stored series stays rational.
struct SeriesPrefactor {
    Rational base;
    long half_power = 0;

    friend bool operator==(const SeriesPrefactor& x, const SeriesPrefactor& y) {
        return x.base == y.base && x.half_power == y.half_power;
    }
};

// prefactor * series(nu); the series is entire with rational coefficients.
struct PrefactorSeries {
    SeriesPrefactor prefactor;
    NuSeries series;
};

// Coefficients of sum_k (-a)^k nu^k / (k! (k+order)!), truncated at nu^M.
std::vector<Rational> scaled_bessel_coeffs(int order, const Rational& a, int M);

// nu^(-order/2) J_order(2 sqrt(a nu)) = a^(order/2) * scaled series; the
// returned value carries the a^(order/2) prefactor and the rational series.
// Negative a gives the modified-Bessel branch through the same formula, with
// the prefactor base kept negative and all series terms positive.
// dim selects the coefficient ring dimension; 0 means max(order, 1).
PrefactorSeries scaled_bessel_nuseries(int order, const Rational& a, int M, int dim = 0);

struct ExpParams {
    Rational lambda;
    Rational mu;
    int n = 1;
    Rational alpha1;
    Rational alpha2;
};

// Solution tables of the exponential ansatz, jointly rescaled by the common
// (lambda mu)^(n/2) prefactor so that all six series are polynomial in nu.
struct ExpSolution {
    ExpParams params;
    int M = 0;
    SeriesPrefactor prefactor;
    NuSeries a1, a2, b, c, d1, d2;
};

// b = alpha1 S, c = alpha2 S with S the scaled Bessel series of order n in
// lambda*mu; then a1 = (beta/lambda) c, a2 = c'/lambda, d2 = -b'/mu - a2 (from
// the system rather than the closed form), d1 = (n-beta)b/mu - (beta/lambda)c
// - nu(a2+d2).
ExpSolution exp_solution(const ExpParams& p, int M);

// The six first-order equations and the two second-order radial equations.
// eq1, eq2, eq5, eq6 vanish identically; the rest vanish through order M-1.
struct ExpResiduals {
    NuSeries eq1, eq2, eq3, eq4, eq5, eq6, ode_b, ode_c;
};
ExpResiduals exp_residuals(const ExpSolution& sol);

// True when every residual coefficient at nu-exponents 0..order is zero.
bool residual_vanishes_to(const NuSeries& r, int order);
bool exp_residuals_vanish_to(const ExpResiduals& r, int order);

// Per-coefficient check that the order-n scaled series differentiates to -a
// times the order-(n+1) one; the half-integer prefactors combine exactly as
// a^(order/2) * a = a^((order+2)/2).
struct DerivativeIdentityReport {
    bool all_match = true;
    int checked = 0;
    std::vector<int> mismatched;  // nu-exponents that differ
};
DerivativeIdentityReport bessel_derivative_identity_check(int order, const Rational& a,
                                                          int M);

}  // namespace hclif
