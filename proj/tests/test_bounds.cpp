#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cdl/bounds.hpp"
#include "cdl/construct.hpp"

using namespace cdl;

namespace {

ZonalPoly sic_annihilator(int d) {
    // d((d+1) x xbar - 1)(x^2 + xbar^2 + 2x + 2xbar + 2)/2
    ZonalPoly a(d), b(d);
    a.add_term(1, 1, Rational(d) * (d + 1));
    a.add_term(0, 0, -Rational(d));
    b.add_term(2, 0, 1);
    b.add_term(0, 2, 1);
    b.add_term(1, 0, 2);
    b.add_term(0, 1, 2);
    b.add_term(0, 0, 2);
    ZonalPoly F = a * b;
    F *= Rational(1, 2);
    return F;
}

ZonalPoly kerdock_annihilator(int d) {
    ZonalPoly F(d);
    F.add_term(4, 0, d);
    F.add_term(0, 4, d);
    F.add_term(3, 0, 2 * d);
    F.add_term(0, 3, 2 * d);
    F.add_term(2, 0, d + 1);
    F.add_term(0, 2, d + 1);
    F.add_term(1, 1, 2);
    F.add_term(1, 0, 2);
    F.add_term(0, 1, 2);
    return F;
}

std::vector<Complex> sic_angles(int d) {
    double s = 1.0 / std::sqrt(d + 1.0);
    return {s, -s, {0, s}, {0, -s}, {0, 1}, {0, -1}, -1};
}

std::vector<Complex> kerdock_angles(int d) {
    double s = 1.0 / std::sqrt(2.0 * d);
    return {{s, s}, {-s, s}, {-s, -s}, {s, -s}, 0.0, {0, 1}, {0, -1}, -1};
}

}  // namespace

TEST_CASE("absolute bounds") {
    CHECK(absolute_design_bound(3, LowerSet::total_degree(2)) == 27);
    CHECK(absolute_design_bound(5, LowerSet::closure({{0, 0}})) == 1);
    CHECK(absolute_design_bound(2, LowerSet::closure({{1, 1}})) == 8);  // 1+2+2+3

    // cl{(5,0)} sums the full column of Harm(k,0) dimensions: C(d+s, d). The
    // printed 'dim Hom(s,0) = C(d+s-1,d-1)' would be 21, already violated by
    // the 27-point degree-5 code itself.
    CHECK(absolute_code_bound(3, LowerSet::closure({{5, 0}})) == 56);
    for (int d = 2; d <= 6; ++d) CHECK(absolute_code_bound(d, LowerSet::closure({{1, 0}})) == 1 + d);
    CHECK(absolute_code_bound(3, LowerSet::total_degree(2)) == 27);
}

TEST_CASE("lp bound, SIC annihilator") {
    for (int d : {2, 8}) {
        auto cert = lp_bound(d, sic_annihilator(d), LpMode::Upper, sic_angles(d));
        CHECK(cert.value == Rational(4 * d * d));  // f00 = 1 exactly
    }
}

TEST_CASE("lp bound, Kerdock annihilator") {
    for (int d : {2, 8}) {
        auto cert = lp_bound(d, kerdock_annihilator(d), LpMode::Upper, kerdock_angles(d));
        CHECK(cert.value == Rational(4 * d * (d + 1)));  // F(1) = 8(d+1), f00 = 2/d
    }
}

TEST_CASE("lp bound, simplex lower bound") {
    for (int d = 2; d <= 5; ++d) {
        ZonalPoly F(d);
        F.add_term(0, 0, 1);
        F.add_term(1, 0, d);
        F.add_term(0, 1, d);
        LowerSet T = LowerSet::closure({{1, 0}, {0, 1}});
        // any angles with Re = -1/(2d) make F vanish
        std::vector<Complex> angles{{-1.0 / (2 * d), 0.21}, {-1.0 / (2 * d), -0.21}};
        auto cert = lp_bound(d, F, LpMode::Lower, angles, &T);
        CHECK(cert.value == Rational(2 * d + 1));
    }
}

TEST_CASE("lp bound refuses on side-condition failures") {
    const int d = 3;
    ZonalPoly F(d);
    F.add_term(1, 1, 1);
    F.add_term(0, 0, -Rational(1, 2));  // f00 = (m11 ... ) mixed sign coefficients
    std::vector<Complex> angles{0.5};
    CHECK_THROWS_AS(lp_bound(d, F, LpMode::Upper, angles), std::invalid_argument);

    ZonalPoly G(d);  // f00 <= 0
    G.add_term(1, 0, 1);
    CHECK_THROWS_AS(lp_bound(d, G, LpMode::Upper, {}), std::invalid_argument);

    // positive at an angle in upper mode
    ZonalPoly H(d);
    H.add_term(0, 0, 1);
    CHECK_THROWS_AS(lp_bound(d, H, LpMode::Upper, angles), std::invalid_argument);
}

TEST_CASE("find_annihilator product form") {
    auto X = cross_polytope(3, 2);
    auto ann = find_annihilator(3, angle_set(X));
    // angles {-1, 0}: F = x(x+1) spanning cl{(2,0)}
    CHECK(ann.span_set == LowerSet::closure({{2, 0}}));
    CHECK(std::abs(eval(ann.poly, Complex(0.0))) < 1e-9);
    CHECK(std::abs(eval(ann.poly, Complex(-1.0))) < 1e-9);
    CHECK(eval(ann.poly, Complex(1.0)).real() > 0);
}

TEST_CASE("find_annihilator equal-modulus form") {
    auto S = sic_d2();
    auto fib = detect_antipodal(S, 4);
    REQUIRE(fib.has_value());
    Matrix pts(static_cast<Eigen::Index>(fib->size()), 2);
    for (std::size_t i = 0; i < fib->size(); ++i) pts.row(static_cast<Eigen::Index>(i)) = S.point((*fib)[i]);
    PointSet L(2, std::move(pts));
    auto ann = find_annihilator(2, angle_set(L));
    CHECK(ann.span_set == LowerSet::closure({{1, 1}}));
    // x xbar - 1/(d+1)
    CHECK(std::abs(to_double(ann.poly.coeff(0, 0)) + 1.0 / 3) < 1e-9);
}

TEST_CASE("find_annihilator fitted span reproduces the tight-design root relation") {
    auto X = coxeter_27();
    auto A = angle_set(X);
    // sum over {i+j<=2} of g_{i,j} vanishes at all six angle values
    auto U2 = LowerSet::total_degree(2);
    ZonalPoly F(3);
    for (const auto& deg : U2.members()) F += jacobi(3, deg);
    for (auto a : A.alphas) CHECK(std::abs(eval(F, a)) < 1e-9);
    // and the fitter finds an annihilator in the same monomial span
    auto ann = find_annihilator(3, A, LowerSet::total_degree(2));
    for (auto a : A.alphas) CHECK(std::abs(eval(ann.poly, a)) < 1e-5);
    CHECK_THROWS_AS(find_annihilator(3, A, LowerSet::closure({{1, 0}})), std::invalid_argument);
}

TEST_CASE("coefficient bound family") {
    // tight-code annihilator sum g_{k,l} over S: every ratio F(1)/f = F(1)
    const int d = 3;
    auto S = LowerSet::total_degree(2);
    ZonalPoly F(d);
    for (const auto& deg : S.members()) F += jacobi(d, deg);
    Annihilator ann{F, expand(d, F), S};
    auto rows = coefficient_bound_check(ann, 27);
    CHECK(rows.size() == S.size());
    for (const auto& [deg, ok] : rows) CHECK(ok);  // 27 <= 27 at every index
    auto rows2 = coefficient_bound_check(ann, 28);
    bool all = true;
    for (const auto& [deg, ok] : rows2) all = all && ok;
    CHECK(!all);

    auto sic = expand(2, sic_annihilator(2));
    Annihilator sic_ann{sic_annihilator(2), sic, LowerSet::total_degree(4)};
    bool thrown = false;
    try {
        auto rows3 = coefficient_bound_check(sic_ann, 16);
        for (const auto& [deg, ok] : rows3) CHECK(ok);  // each ratio >= 4d^2 = 16
    } catch (const std::invalid_argument&) {
        thrown = true;  // SIC expansion has zero coefficients outside its support
    }
    CHECK(!thrown);
}

TEST_CASE("antipodal bound") {
    SUBCASE("cl{(1,0)} at n=2 gives the pair bound") {
        for (int d = 2; d <= 5; ++d) {
            auto cert = antipodal_bound(d, LowerSet::closure({{1, 0}}), 2);
            CHECK(cert.value == Rational(2));
            CHECK(cert.branch_sn == Rational(1));
            CHECK(cert.branch_rest == Rational(d));
        }
    }
    SUBCASE("cross polytope annihilator span cl{(2,0)}") {
        for (int d = 2; d <= 5; ++d) {
            auto cert = antipodal_bound(d, LowerSet::closure({{2, 0}}), 2);
            CHECK(cert.value == Rational(2 * d));  // S_2 = {(0,0),(2,0)}, rest = {(1,0)}
        }
    }
    SUBCASE("projective-only support reduces to the projective bound") {
        // S_n within {(k,k)}: the S_n branch is the projective dimension sum
        auto S = LowerSet::closure({{1, 1}});
        auto cert = antipodal_bound(3, S, 2);
        BigInt proj = harm_dim(3, {0, 0}) + harm_dim(3, {1, 1});
        CHECK(cert.branch_sn == Rational(proj));
    }
}

TEST_CASE("tightness of the 27-point set") {
    auto rep = tightness_check(coxeter_27(), LowerSet::total_degree(2));
    CHECK(rep.size_equality);
    CHECK(rep.annihilator_vanishes);
    CHECK(rep.convolution_design);
    CHECK(rep.tight());
    CHECK(rep.consistent());
}

TEST_CASE("tightness fails consistently on non-tight inputs") {
    auto cp = cross_polytope(3, 2);
    auto rep = tightness_check(cp, LowerSet::closure({{1, 0}}));
    CHECK(!rep.tight());
    CHECK(rep.consistent());

    auto sic = sic_d2();
    auto rep2 = tightness_check(sic, LowerSet::closure({{1, 1}, {2, 0}}));
    CHECK(!rep2.size_equality);  // 16 != sum of dimensions
    CHECK(!rep2.tight());
    CHECK(rep2.consistent());
}
