#pragma once

#include <string>
#include <vector>

#include "hclif/betapoly.hpp"
#include "hclif/ck.hpp"
#include "hclif/polyfun.hpp"

namespace hclif {

// Which radial ansatz the tables solve:
//   plain        A = a1 + zd z a2, B = z0 zd b, C = zbar0 z c, D = d1 + zd z d2
//   z0_power     same with prefactors z0^s (A, D), z0^(s+1) (B), z0^(s-1) (C)
//   z0bar_power  mirror case with zbar0 prefactors and the B/C shifts swapped
// where zd z abbreviates the Clifford product of the two Witt vectors and all
// six scalar tables depend on (nu0, nu) = (|z0|^2, |z|^2).
enum class AxialKind { plain, z0_power, z0bar_power };

// Radial series solution: entry k of each table multiplies nu0^k.
struct AxialSolution {
    AxialKind kind = AxialKind::plain;
    int s = 0;  // prefactor exponent; 0 for plain
    int n = 1;
    int K = 0;
    int M = 0;
    std::vector<NuSeries> a1, a2, b, c, d1, d2;  // indices 0..K
};

// Fills the tables from the free initial data a1(0,.), a2(0,.), d1(0,.),
// d2(0,.). Initial series may carry fractional exponents; polynomial data of
// degree > M is rejected.
AxialSolution vekua_solve_plain(const NuSeries& a01, const NuSeries& a02,
                                const NuSeries& d01, const NuSeries& d02,
                                int K, int M);

// Monomial initial data a1(0,.) = alpha1 nu^s, a2(0,.) = alpha2 nu^(s-1),
// d1(0,.) = delta1 nu^s, d2(0,.) = delta2 nu^(s-1), evaluated through the
// closed product formulas instead of the recurrences.
AxialSolution generalized_powers(const Rational& s, const Rational& alpha1,
                                 const Rational& alpha2, const Rational& delta1,
                                 const Rational& delta2, int n, int K);

// z0^s ansatz from the free data c(0,.), d1(0,.), d2(0,.); s >= 1.
AxialSolution vekua_solve_z0power(const NuSeries& c0, const NuSeries& d01,
                                  const NuSeries& d02, int s, int K, int M);

// zbar0^s ansatz from the free data a1(0,.), a2(0,.), b(0,.); s >= 1.
AxialSolution vekua_solve_z0barpower(const NuSeries& a01, const NuSeries& a02,
                                     const NuSeries& b0, int s, int K, int M);

// Per-index residuals of the six graded equations of the applicable system
// pair. Labels look like "sys1.eq3[k=2]".
struct AxialResidualReport {
    bool all_zero = true;
    std::vector<std::string> nonzero;
};
AxialResidualReport axial_residuals(const AxialSolution& sol);

// True when every table entry beyond index K provably vanishes, which the
// recurrences reduce to b_K = c_K = 0.
bool axial_terminated(const AxialSolution& sol);

// Substitutes nu0 = z0 zbar0, nu = sum z_j zbar_j, beta = sum f_j^dagger f_j
// and assembles f = A + f_0 B + f_0^dagger C + f_0^dagger f_0 D including the
// kind's z0/zbar0 prefactors. Requires a terminated, polynomial solution.
PolyFunction axial_expand(const AxialSolution& sol);

}  // namespace hclif
