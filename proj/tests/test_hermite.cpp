#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hclif/ck.hpp"
#include "hclif/hermite.hpp"

using namespace hclif;

TEST_CASE("generalized Laguerre coefficients") {
    auto c = laguerre(1, 1);  // 2 - x
    REQUIRE(c.size() == 2);
    CHECK(c[0] == 2);
    CHECK(c[1] == -1);
    auto q = laguerre(2, 0);  // 1 - 2x + x^2/2
    REQUIRE(q.size() == 3);
    CHECK(q[0] == 1);
    CHECK(q[1] == -2);
    CHECK(q[2] == rat(1, 2));
    // leading coefficient (-1)^p / p!
    for (int p = 0; p <= 6; ++p)
        for (long a = -2; a <= 6; ++a)
            CHECK(laguerre(p, a)[p] == Rational(parity_sign(p)) / factorial(p));
    CHECK_THROWS_AS(laguerre(-1, 0), std::domain_error);
}

TEST_CASE("Laguerre three-term relation") {
    // x L_{p-1}^{(a+1)} = (p+a) L_{p-1}^{(a)} - p L_p^{(a)}
    for (int p = 1; p <= 6; ++p)
        for (long a = 0; a <= 6; ++a) {
            auto lhs = laguerre(p - 1, a + 1);
            auto r1 = laguerre(p - 1, a);
            auto r2 = laguerre(p, a);
            for (int i = 0; i <= p; ++i) {
                Rational left =
                    (i >= 1 && i - 1 < (int)lhs.size()) ? lhs[i - 1] : Rational(0);
                Rational right =
                    Rational(p + a) * (i < (int)r1.size() ? r1[i] : Rational(0)) -
                    Rational(p) * r2[i];
                CHECK(left == right);
            }
        }
}

TEST_CASE("lowest polynomials of each type") {
    int n = 1;
    auto zv = vector_var(n, false, VectorVar::z);
    auto zd = vector_var(n, false, VectorVar::zdagger);
    auto h1 = hermite_rodrigues(1, 0, n);
    CHECK(h1 == GaussianRational(rat(-1, 2)) * zv);
    CHECK(hermite_closed_form(1, 0, n) == h1);
    auto h2 = hermite_rodrigues(2, 0, n);
    CHECK(h2 == GaussianRational(rat(-1, 2)) * zd);
    auto h3 = hermite_rodrigues(3, 0, n);
    auto expect3 =
        GaussianRational(rat(-1, 2)) *
            PolyFunction::constant(n, false, beta_element({n, false})) +
        GaussianRational(rat(1, 4)) * (zd * zv);
    CHECK(h3 == expect3);
    CHECK(hermite_closed_form(3, 0, n) == h3);
    auto h4 = hermite_rodrigues(4, 0, n);
    Algebra alg{n, false};
    auto nb = CliffordElement::scalar(alg, GaussianRational(n)) - beta_element(alg);
    auto expect4 = GaussianRational(rat(-1, 2)) * PolyFunction::constant(n, false, nb) +
                   GaussianRational(rat(1, 4)) * (zv * zd);
    CHECK(h4 == expect4);
}

TEST_CASE("degree five example in one variable pair") {
    auto h = hermite_closed_form(1, 1, 1);
    auto zv = vector_var(1, false, VectorVar::z);
    auto x = PolyFunction::variable(1, false, Var::z(1)) *
             PolyFunction::variable(1, false, Var::zbar(1));
    auto expect = zv * (GaussianRational(2) * PolyFunction::one(1) -
                        GaussianRational(rat(1, 2)) * x);
    CHECK(h == expect);
    CHECK(hermite_rodrigues(1, 1, 1) == h);
}

TEST_CASE("Rodrigues formula equals the closed form") {
    for (int n = 1; n <= 2; ++n)
        for (int type = 1; type <= 4; ++type)
            for (int p = 0; p <= 3; ++p) {
                auto a = hermite_rodrigues(type, p, n);
                auto b = hermite_closed_form(type, p, n);
                CHECK(a == b);
                int deg = (type <= 2) ? 2 * p + 1 : 2 * p + 2;
                CHECK(a.degree() == deg);
            }
    CHECK_THROWS_AS(hermite_rodrigues(0, 1, 1), std::domain_error);
    CHECK_THROWS_AS(hermite_rodrigues(5, 1, 1), std::domain_error);
    CHECK_THROWS_AS(hermite_rodrigues(1, -1, 1), std::domain_error);
}

TEST_CASE("weighted class one series matches its closed coefficients") {
    for (int n = 1; n <= 2; ++n) {
        auto ew = PolyFunction::one(n).with_weight(Weight::gaussian);
        auto t = ck_class1(ew, PolyFunction::zero(n), 4);
        for (int k = 0; k <= 4; ++k) {
            auto g = gaussian_ck_coefficients(k, n);
            CHECK(g.A == t.A[k]);
            CHECK(g.B == t.B[k]);
            CHECK(g.C == t.C[k]);
            CHECK(g.D == t.D[k]);
        }
    }
}

TEST_CASE("weighted class one frozen low-order coefficients") {
    int n = 1;
    auto g0 = gaussian_ck_coefficients(0, n);
    auto zd = vector_var(n, false, VectorVar::zdagger);
    auto zv = vector_var(n, false, VectorVar::z);
    CHECK(g0.B == (GaussianRational(rat(1, 2)) * zd).with_weight(Weight::gaussian));
    CHECK(g0.C == (GaussianRational(rat(1, 2)) * zv).with_weight(Weight::gaussian));
    auto g1 = gaussian_ck_coefficients(1, n);
    auto beta = PolyFunction::constant(n, false, beta_element({n, false}));
    auto expectA1 = (GaussianRational(rat(1, 2)) *
                     (beta - GaussianRational(rat(1, 2)) * (zd * zv)))
                        .with_weight(Weight::gaussian);
    CHECK(g1.A == expectA1);
}

TEST_CASE("weighted class two and three series match their closed coefficients") {
    for (int n = 1; n <= 2; ++n) {
        auto ew = PolyFunction::one(n).with_weight(Weight::gaussian);
        for (int s = 1; s <= 3; ++s) {
            auto t2 = ck_class2(ew, ew, s, 3);
            auto t3 = ck_class3(ew, ew, s, 3);
            for (int k = 0; k <= 3; ++k) {
                auto g2 = gaussian_class2(k, s, n);
                CHECK(g2.A == t2.A[k]);
                CHECK(g2.B == t2.B[k]);
                CHECK(g2.C == t2.C[k]);
                CHECK(g2.D == t2.D[k]);
                auto g3 = gaussian_class3(k, s, n);
                CHECK(g3.A == t3.A[k]);
                CHECK(g3.B == t3.B[k]);
                CHECK(g3.C == t3.C[k]);
                CHECK(g3.D == t3.D[k]);
            }
        }
    }
}

TEST_CASE("weighted class two and three frozen corner values") {
    auto zd = vector_var(1, false, VectorVar::zdagger);
    auto zv = vector_var(1, false, VectorVar::z);
    auto g2 = gaussian_class2(0, 1, 1);
    CHECK(g2.A == (GaussianRational(rat(-1, 2)) * zd).with_weight(Weight::gaussian));
    auto g3 = gaussian_class3(0, 2, 1);
    CHECK(g3.C == (GaussianRational(rat(1, 6)) * zv).with_weight(Weight::gaussian));
}

TEST_CASE("Laguerre argument evaluation helper") {
    // L(|z|^2 / 2) as a polynomial function; leading term sign check at p=1
    int n = 1;
    auto l0 = laguerre_at_half_norm(0, n, n);
    CHECK(l0 == PolyFunction::one(n));
    auto l1 = laguerre_at_half_norm(1, n, n);
    auto x = PolyFunction::variable(n, false, Var::z(1)) *
             PolyFunction::variable(n, false, Var::zbar(1));
    auto expect = GaussianRational(1 + n) * PolyFunction::one(n) -
                  GaussianRational(rat(1, 2)) * x;
    CHECK(l1 == expect);
}
