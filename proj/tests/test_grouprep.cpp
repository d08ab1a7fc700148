#include <doctest.h>

#include <random>

#include "cdl/grouprep.hpp"

using namespace cdl;

namespace {

std::vector<Matrix> pauli2_gens() {
    Matrix Px(2, 2), Pz(2, 2);
    Px << 0, 1, 1, 0;
    Pz << 1, 0, 0, -1;
    return {Px, Pz};
}

}  // namespace

TEST_CASE("group closure") {
    auto gens = pauli2_gens();
    auto G = close_group(gens);
    CHECK(G.order() == 8);  // +-{I, X, Z, XZ}

    Matrix iI = Complex(0, 1) * Matrix::Identity(2, 2);
    auto G2 = close_group({gens[0], gens[1], iI});
    CHECK(G2.order() == 16);  // i^k {I, X, Z, XZ}

    auto trivial = close_group({Matrix::Identity(3, 3)});
    CHECK(trivial.order() == 1);

    CHECK_THROWS_AS(close_group({2.0 * Matrix::Identity(2, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(close_group(gens, 3), std::runtime_error);
}

TEST_CASE("group closure is generator-order invariant") {
    auto gens = pauli2_gens();
    auto A = close_group({gens[0], gens[1]});
    auto B = close_group({gens[1], gens[0]});
    REQUIRE(A.order() == B.order());
    for (const auto& g : A.elements) {
        bool found = false;
        for (const auto& h : B.elements)
            if ((g - h).cwiseAbs().maxCoeff() < 1e-9) found = true;
        CHECK(found);
    }
}

TEST_CASE("pauli group orders and relations") {
    CHECK(pauli_group(2).order() == 8);
    CHECK(pauli_group(3).order() == 27);
    auto G = pauli_group(3);
    Matrix Px = Matrix::Zero(3, 3), Pz = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
        Px((i + 1) % 3, i) = 1.0;
        Pz(i, i) = std::polar(1.0, 2 * std::numbers::pi * i / 3);
    }
    Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    CHECK(((Px * Pz) - w * (Pz * Px)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("orbits") {
    auto G = pauli_group(2);
    Vector e1(2);
    e1 << 1.0, 0.0;
    auto X = orbit(G, e1);
    CHECK(X.size() == 4);  // {+-e1, +-e2}
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    Vector v(2);
    v << Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
    v /= v.norm();
    auto Y = orbit(G, v);
    CHECK(is_design(Y, LowerSet::total_degree(2)));
}

TEST_CASE("molien dimensions for the trivial group") {
    FiniteUnitaryGroup triv{3, {Matrix::Identity(3, 3)}, "trivial"};
    auto hom = molien_hom(triv, 4, 4);
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l)
            CHECK(hom.at({k, l}) == static_cast<long>(hom_dim(3, {k, l}).convert_to<long>()));
    auto harm = molien_harm(triv, 3, 3);
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l)
            CHECK(harm.at({k, l}) == static_cast<long>(harm_dim(3, {k, l}).convert_to<long>()));
}

TEST_CASE("molien for pauli d=2") {
    auto G = pauli_group(2);
    auto hom = molien_hom(G, 3, 3);
    CHECK(hom.at({0, 0}) == 1);
    CHECK(hom.at({1, 1}) == 1);  // only sum z_i zbar_i survives
    auto harm = molien_harm(G, 3, 3);
    CHECK(harm.at({1, 0}) == 0);
    CHECK(harm.at({0, 1}) == 0);
    CHECK(harm.at({1, 1}) == 0);
    CHECK(harm.at({2, 2}) == 2);
}

TEST_CASE("molien parity for groups containing -I") {
    auto G = pauli_group(2);  // contains -I
    auto harm = molien_harm(G, 4, 4);
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l)
            if ((k + l) % 2 == 1) CHECK(harm.at({k, l}) == 0);
}

TEST_CASE("harm irreducibility") {
    auto G = pauli_group(2);
    CHECK(harm_irreducible(G, {1, 0}));
    CHECK(harm_irreducible(G, {0, 1}));
    CHECK(!harm_irreducible(G, {1, 1}));  // character norm 3
    FiniteUnitaryGroup triv{2, {Matrix::Identity(2, 2)}, "trivial"};
    CHECK(!harm_irreducible(triv, {1, 0}));
}

TEST_CASE("orbit design strength report") {
    auto G = pauli_group(2);
    auto U = LowerSet::closure({{1, 0}, {0, 1}});
    auto rep = orbit_design_strength(G, U, 4);
    // irreducibility over U guarantees a U*U = {k+l<=2} design
    CHECK(LowerSet::total_degree(2).subset_of(rep.irreducible_guarantee));
    // vanishing invariants certify U itself
    CHECK(U.subset_of(rep.invariant_guarantee));
    // measured strength contains the guarantee
    CHECK(rep.irreducible_guarantee.subset_of(rep.empirical));

    FiniteUnitaryGroup triv{2, {Matrix::Identity(2, 2)}, "trivial"};
    auto rep2 = orbit_design_strength(triv, U, 2);
    CHECK(rep2.invariant_guarantee == LowerSet::closure({{0, 0}}));
}
