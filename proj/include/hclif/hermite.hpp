#pragma once

#include <vector>

#include "hclif/polyfun.hpp"

namespace hclif {

// Coefficients c_0..c_p of the generalized Laguerre polynomial L_p^{(alpha)},
// c_i = (-1)^i binom(p+alpha, p-i) / i!. alpha may be any integer.
std::vector<Rational> laguerre(int p, long alpha);

// L_p^{(alpha)} evaluated at |z|^2/2 as a scalar-coefficient polynomial.
PolyFunction laguerre_at_half_norm(int p, long alpha, int n);

// Hermitian Clifford-Hermite polynomial of type 1..4 via the Rodrigues
// construction: apply Delta^p to the Gaussian, then d_z^dagger (1), d_z (2),
// d_z d_z^dagger (3) or d_z^dagger d_z (4), and strip the weight.
// Degree 2p+1 for types 1, 2 and 2p+2 for types 3, 4.
PolyFunction hermite_rodrigues(int type, int p, int n);

// The same polynomial from its Laguerre closed form.
PolyFunction hermite_closed_form(int type, int p, int n);

// Closed form with the Euler element replaced, e.g. by a scalar eigenvalue
// times the identity when working in a fixed homogeneity sector.
PolyFunction hermite_closed_form(int type, int p, int n, const CliffordElement& beta_sub);

// One index of a Gaussian-seeded series solution; entries carry the weight.
struct GaussianCK {
    PolyFunction A, B, C, D;
};

// Laguerre form of the series extension of the Gaussian (A0 = exp weight,
// D0 = 0).
GaussianCK gaussian_ck_coefficients(int k, int n);

// Laguerre form of the z_0^s-class solution seeded with C0 = D0 = Gaussian.
GaussianCK gaussian_class2(int k, int s, int n);

// Laguerre form of the zbar_0^s-class solution seeded with A0 = B0 = Gaussian.
GaussianCK gaussian_class3(int k, int s, int n);

}  // namespace hclif
