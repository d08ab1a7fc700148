#include <doctest.h>

#include <numbers>
#include <random>

#include "cdl/construct.hpp"
#include "cdl/design.hpp"

using namespace cdl;

TEST_CASE("cross polytope residuals") {
    auto X = cross_polytope(4, 2);
    CHECK(design_residual(X, {1, 1}) < 1e-10);
    CHECK(design_residual(X, {1, 0}) < 1e-10);
    CHECK(design_residual(X, {2, 2}) > 0.1);
    CHECK_THROWS_AS(design_residual(X, {0, 0}), std::invalid_argument);
}

TEST_CASE("27-point residual table") {
    auto X = coxeter_27();
    auto T = LowerSet::closure({{5, 0}, {3, 2}, {2, 3}, {0, 5}});
    for (const auto& deg : T.members()) {
        if (deg == BiDegree{0, 0}) continue;
        CHECK(design_residual(X, deg) < 1e-9);
    }
    // (4,1) fails even though the isolated (4,2) residual happens to vanish
    CHECK(design_residual(X, {4, 1}) > 1e-3);
    CHECK(design_residual(X, {6, 0}) > 1e-3);
}

TEST_CASE("is_design verdicts") {
    auto X = coxeter_27();
    CHECK(is_design(X, LowerSet::closure({{5, 0}, {3, 2}, {2, 3}, {0, 5}})));
    CHECK(!is_design(X, LowerSet::closure({{4, 2}})));
    CHECK(is_design(X, LowerSet::closure({{0, 0}})));
}

TEST_CASE("max design strength of the SIC cover") {
    auto X = sic_d2();
    auto rep = max_design_strength(X, 6);
    CHECK(rep.verdict == LowerSet::closure({{3, 2}, {2, 3}}));
}

TEST_CASE("max design strength of the MUB C^2 cover") {
    auto X = mub_cover(MubFamily::Odd, 1);
    auto rep = max_design_strength(X, 7);
    CHECK(rep.verdict == LowerSet::closure({{7, 0}, {4, 3}, {3, 4}, {0, 7}}));
}

TEST_CASE("max design strength of the 240-point set") {
    auto X = coxeter_240();
    auto rep7 = max_design_strength(X, 7);
    CHECK(rep7.verdict == LowerSet::total_degree(7));
    // at cutoff 8 the 6-antipodal structure forces the k-l != 0 mod 6 row
    auto rep8 = max_design_strength(X, 8);
    auto expect = LowerSet::total_degree(7).members();
    for (auto deg : {BiDegree{8, 0}, {6, 2}, {5, 3}, {3, 5}, {2, 6}, {0, 8}}) expect.insert(deg);
    CHECK(rep8.verdict == LowerSet(expect));
}

TEST_CASE("moments") {
    auto X = cross_polytope(3, 2);
    CHECK(std::abs(moment(X, {0, 0}) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(moment(X, {1, 1}) - Complex(1.0 / 3)) < 1e-14);
    CHECK(std::abs(moment(X, {1, 0})) < 1e-14);  // 2-antipodal kills odd monomials
    CHECK(sphere_moment(3, {1, 1}) == Rational(1, 3));
    CHECK(sphere_moment(3, {2, 2}) == Rational(1, 6));
    CHECK(sphere_moment(3, {2, 1}) == Rational(0));
}

TEST_CASE("moment lower bound against the sphere value") {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 5; ++trial) {
        int d = 2 + trial % 3;
        Matrix pts(6, d);
        for (int i = 0; i < 6; ++i) {
            Vector v(d);
            for (int j = 0; j < d; ++j) v(j) = Complex(g(rng), g(rng));
            pts.row(i) = v / v.norm();
        }
        PointSet X(d, std::move(pts));
        for (int k = 1; k <= 3; ++k) {
            Complex m = moment(X, {k, k});
            CHECK(m.imag() == doctest::Approx(0.0).epsilon(1e-9));
            CHECK(m.real() >= to_double(sphere_moment(d, {k, k})) - 1e-12);
        }
    }
}

TEST_CASE("regularity agrees with the residual criterion") {
    auto X = coxeter_27();
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            if (k == 0 && l == 0) continue;
            bool via_moment = regularity_check(X, {k, l});
            bool via_residual = design_residual(X, {k, l}) <= kDesignTol;
            CHECK(via_moment == via_residual);
        }
    // SIC fiber lines are (1,1)- and (2,2)-regular (projective 2-design)
    auto S = sic_d2();
    auto fib = detect_antipodal(S, 4);
    REQUIRE(fib.has_value());
    Matrix pts(static_cast<Eigen::Index>(fib->size()), 2);
    for (std::size_t i = 0; i < fib->size(); ++i) pts.row(static_cast<Eigen::Index>(i)) = S.point((*fib)[i]);
    PointSet L(2, std::move(pts));
    CHECK(regularity_check(L, {1, 1}));
    CHECK(regularity_check(L, {2, 2}));
}

TEST_CASE("real design bridge") {
    CHECK(real_design_check(coxeter_27(), 4));
    // phi of the 2-antipodal cross polytope hits only d of the 2d real axes,
    // so it stops at t = 1; the 4-antipodal cover fills {k+l <= 3}
    auto X2 = cross_polytope(3, 2);
    CHECK(real_design_check(X2, 1));
    CHECK(!real_design_check(X2, 2));
    auto X4 = cross_polytope(3, 4);
    CHECK(real_design_check(X4, 3));
    CHECK(!real_design_check(X4, 4));
    // agreement with the complex criterion (the two sides of the bridge)
    CHECK(is_design(X4, LowerSet::total_degree(3)));
    CHECK(!is_design(X4, LowerSet::total_degree(4)));
}

TEST_CASE("projective design covers (n coprime to 2, t = 2)") {
    auto L = mub_odd_prime(3, true);  // complete MUBs: a projective 2-design
    auto X = antipodal_cover(L, 3);
    CHECK(X.size() == 36);
    CHECK(is_design(X, LowerSet::closure({{2, 2}})));
}

