#include <doctest.h>

#include "cdl/zonal.hpp"

using namespace cdl;

TEST_CASE("harmonic space dimensions") {
    CHECK(harm_dim(2, {0, 0}) == 1);
    CHECK(harm_dim(7, {0, 0}) == 1);
    CHECK(harm_dim(3, {1, 1}) == 8);  // (d+1)(d-1)
    CHECK(harm_dim(2, {2, 0}) == 3);  // d(d+1)/2
    CHECK(harm_dim(3, {1, 0}) == 3);
    CHECK(harm_dim(4, {2, 2}) == 84);
    CHECK_THROWS_AS(harm_dim(0, {1, 0}), std::invalid_argument);
}

TEST_CASE("printed jacobi polynomials") {
    for (int d = 2; d <= 6; ++d) {
        auto g00 = jacobi(d, {0, 0});
        CHECK(g00.coeff(0, 0) == Rational(1));
        CHECK(g00.coeffs().size() == 1);

        auto g11 = jacobi(d, {1, 1});
        CHECK(g11.coeff(1, 1) == Rational(d) * (d + 1));
        CHECK(g11.coeff(0, 0) == -Rational(d + 1));

        auto g21 = jacobi(d, {2, 1});
        CHECK(g21.coeff(2, 1) == Rational(d * (d + 2)) * Rational(d + 1, 2));
        CHECK(g21.coeff(1, 0) == -Rational(d * (d + 2)));

        auto g10 = jacobi(d, {1, 0});
        CHECK(g10.coeff(1, 0) == Rational(d));
    }
    CHECK_THROWS_AS(jacobi(1, {1, 0}), std::invalid_argument);
}

TEST_CASE("g(1) equals the harmonic dimension, exactly") {
    for (int d = 2; d <= 5; ++d)
        for (int k = 0; k <= 5; ++k)
            for (int l = 0; l <= 5; ++l)
                CHECK(jacobi(d, {k, l}).eval_rational(1) == Rational(harm_dim(d, {k, l})));
}

TEST_CASE("conjugate symmetry: swapping x and xbar swaps (k,l)") {
    for (int d = 2; d <= 4; ++d)
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= 3; ++l) CHECK(jacobi(d, {k, l}).conj() == jacobi(d, {l, k}));
}

TEST_CASE("evaluation") {
    CHECK(eval(jacobi(4, {1, 0}), 0.5) == Complex(2.0));
    for (int d = 2; d <= 5; ++d) {
        CHECK(std::abs(eval(jacobi(d, {1, 1}), 0.0) - Complex(-(d + 1.0))) < 1e-12);
        CHECK(std::abs(eval(jacobi(d, {3, 2}), 1.0) - Complex(to_double(Rational(harm_dim(d, {3, 2}))))) <
              1e-9);
    }
}

TEST_CASE("expansion basics") {
    const int d = 3;
    SUBCASE("constants") {
        ZonalPoly F(d);
        F.add_term(0, 0, 1);
        auto e = expand(d, F);
        CHECK(e.terms.size() == 1);
        CHECK(e.coeff({0, 0}) == Rational(1));
    }
    SUBCASE("single monomial x") {
        ZonalPoly F(d);
        F.add_term(1, 0, 1);
        auto e = expand(d, F);
        CHECK(e.terms.size() == 1);
        CHECK(e.coeff({1, 0}) == Rational(1, d));
    }
    SUBCASE("simplex annihilator 1 + d(x + xbar)") {
        ZonalPoly F(d);
        F.add_term(0, 0, 1);
        F.add_term(1, 0, d);
        F.add_term(0, 1, d);
        auto e = expand(d, F);
        CHECK(e.terms.size() == 3);
        CHECK(e.coeff({0, 0}) == Rational(1));
        CHECK(e.coeff({1, 0}) == Rational(1));
        CHECK(e.coeff({0, 1}) == Rational(1));
    }
}

TEST_CASE("expansion routes agree and invert synthesis") {
    for (int d = 2; d <= 4; ++d) {
        ZonalPoly F(d);
        F.add_term(3, 1, Rational(7, 3));
        F.add_term(1, 2, Rational(-5, 2));
        F.add_term(2, 2, Rational(1, 11));
        F.add_term(0, 0, Rational(4));
        auto e1 = expand(d, F);
        auto e2 = expand_by_recurrence(d, F);
        CHECK(e1.terms == e2.terms);
        CHECK(synthesize(e1) == F);
    }
}

TEST_CASE("product expansion") {
    for (int d = 2; d <= 5; ++d) {
        SUBCASE("identity factor") {
            auto e = product_expand(d, {0, 0}, {2, 1});
            CHECK(e.terms.size() == 1);
            CHECK(e.coeff({2, 1}) == Rational(1));
        }
        auto e = product_expand(d, {1, 0}, {0, 1});
        CHECK(e.coeff({1, 1}) == Rational(d, d + 1));
        CHECK(e.coeff({0, 0}) == Rational(d));  // = m_{1,0}, the delta rule
        auto e2 = product_expand(d, {1, 0}, {1, 0});
        CHECK(e2.terms.size() == 1);
        CHECK(e2.coeff({2, 0}) == Rational(2 * d, d + 1));
    }
}

TEST_CASE("gegenbauer recurrence endpoints") {
    for (int d = 2; d <= 8; ++d) {
        auto q0 = gegenbauer(d, 0);
        REQUIRE(q0.size() == 1);
        CHECK(q0[0] == Rational(1));
        auto q1 = gegenbauer(d, 1);
        CHECK(q1[1] == Rational(d));
        auto q2 = gegenbauer(d, 2);
        // ((d+2)/2)(d x^2 - 1)
        CHECK(q2[2] == Rational(d * (d + 2), 2));
        CHECK(q2[0] == -Rational(d + 2, 2));
        CHECK(q2[1] == Rational(0));
    }
}

TEST_CASE("gegenbauer matches the diagonal jacobi sum at degree one") {
    for (int d = 2; d <= 8; ++d) {
        Complex z(0.32, -0.41);
        double lhs = gegenbauer_eval(gegenbauer(2 * d, 1), z.real());
        Complex rhs = eval(jacobi(d, {1, 0}), z) + eval(jacobi(d, {0, 1}), z);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("lower set closure") {
    auto T = LowerSet::closure({{0, 2}, {1, 1}, {2, 0}});
    CHECK(T.size() == 6);
    CHECK(T.contains({0, 0}));
    CHECK(T.contains({1, 1}));
    CHECK(!T.contains({2, 1}));

    CHECK(LowerSet::closure({{0, 0}}).size() == 1);
    CHECK(LowerSet::closure({{3, 0}, {1, 1}, {0, 3}}).size() == 8);
}

TEST_CASE("convolution") {
    auto single = LowerSet::closure({{0, 0}});
    // {(0,0)} * V transposes V; it is the identity on conjugation-closed sets
    auto V = LowerSet::closure({{2, 1}, {1, 2}});
    CHECK(convolve(single, V) == std::set<BiDegree>(V.members().begin(), V.members().end()));
    auto Vasym = LowerSet::closure({{2, 1}});
    auto VasymT = LowerSet::closure({{1, 2}});
    CHECK(convolve(single, Vasym) == std::set<BiDegree>(VasymT.members().begin(), VasymT.members().end()));

    auto U = LowerSet::closure({{1, 0}, {0, 1}});
    auto UU = convolve(U, U);
    std::set<BiDegree> expect{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
    CHECK(UU == expect);

    auto c11 = LowerSet::closure({{1, 1}});
    CHECK(convolve_closed(c11, c11) == LowerSet::closure({{2, 2}}));
}

TEST_CASE("classical-jacobi oracle agrees on the real axis") {
    for (int d = 2; d <= 4; ++d)
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; l <= 3; ++l) {
                Rational x(3, 7);
                CHECK(jacobi(d, {k, l}).eval_rational(x) == jacobi_via_classical(d, {k, l}, x));
            }
}
