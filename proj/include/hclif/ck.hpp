#pragma once

#include <utility>
#include <vector>

#include "hclif/polyfun.hpp"

namespace hclif {

// f = A + f_0 B + f_0^dagger C + f_0^dagger f_0 D with components free of the
// two extended generators. The components still depend on z_0, zbar_0.
struct Decomposition {
    PolyFunction A, B, C, D;
};

Decomposition decompose(const PolyFunction& f);
PolyFunction compose(const Decomposition& d);

// r1 = (f_0^dagger d_z0 + d_z) f,  r2 = (f_0 d_zbar0 + d_z^dagger) f.
std::pair<PolyFunction, PolyFunction> residuals_hmonogenic(const PolyFunction& f);

// s1 = (f_0^dagger d_z0 + f_0^dagger f_0 d_z) f,
// s2 = (f_0 d_zbar0 + f_0 f_0^dagger d_z^dagger) f.
std::pair<PolyFunction, PolyFunction> residuals_submonogenic(const PolyFunction& f);

// Four-equation refinement; q1..q4 vanish together iff r1, r2 vanish.
struct ResidualQuad {
    PolyFunction q1, q2, q3, q4;
};
ResidualQuad residuals_hmsF(const PolyFunction& f);

// g = f_0^dagger d_z f and h = f_0 d_z^dagger f; the data making a
// submonogenic f a solution of the inhomogeneous system.
std::pair<PolyFunction, PolyFunction> inhomogeneous_data(const PolyFunction& f);

// Componentwise residuals of the split systems:
//   w1a = d_z0 A - d_z C           w1b = d_z^dagger A + d_zbar0 C
//   w2a = d_z0 B + d_z (A + D)     w2b = d_z^dagger B - d_zbar0 (A + D)
struct ComponentResiduals {
    PolyFunction w1a, w1b, w2a, w2b;
};
ComponentResiduals component_residuals(const Decomposition& d);

enum class CKClass { one, two, three };

// Coefficient table of a z_0-radial series solution. Entries live in the plain
// space. terminated means every entry beyond index K provably vanishes.
struct CKTable {
    CKClass cls = CKClass::one;
    int s = 0;  // prefactor exponent; 0 for class one
    int K = 0;
    int n = 1;
    bool terminated = false;
    std::vector<PolyFunction> A, B, C, D;  // indices 0..K
};

// Series extension of A0, D0: A0 + f_0^dagger f_0 D0 is the restriction of the
// assembled solution.
CKTable ck_class1(const PolyFunction& A0, const PolyFunction& D0, int K);

// z_0^s-prefactored class from C0, D0; s >= 1.
CKTable ck_class2(const PolyFunction& C0, const PolyFunction& D0, int s, int K);

// zbar_0^s-prefactored class from A0, B0; s >= 1.
CKTable ck_class3(const PolyFunction& A0, const PolyFunction& B0, int s, int K);

PolyFunction assemble(const CKTable& t);

// Full double-indexed table; entry (k, l) multiplies z_0^k zbar_0^l in all
// four components.
struct CKDoubleTable {
    int K = 0;
    int n = 1;
    std::vector<std::vector<PolyFunction>> A, B, C, D;  // [k][l], 0..K each
};

// Interior from the boundary families A_{0,l}, B_{0,l} (rows) and C_{k,0},
// D_{k,0} (columns), each supplied for indices 0..K.
CKDoubleTable ck_double(const std::vector<PolyFunction>& A0row,
                        const std::vector<PolyFunction>& B0row,
                        const std::vector<PolyFunction>& Ccol,
                        const std::vector<PolyFunction>& Dcol);

PolyFunction assemble(const CKDoubleTable& t);

}  // namespace hclif
