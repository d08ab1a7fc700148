#pragma once

#include <cstdint>
#include <vector>

#include "cdl/pointset.hpp"

namespace cdl {

// ---- Galois ring GR(4^r) = Z4[x]/(h), h the Hensel lift of a primitive
// binary polynomial of degree r. Elements are coefficient vectors over Z4.
class GaloisRing4 {
public:
    explicit GaloisRing4(int r);

    int r() const { return r_; }
    const std::vector<int>& modulus() const { return h_; }
    using Elem = std::vector<uint8_t>;  // length r, entries mod 4

    Elem zero() const { return Elem(r_, 0); }
    Elem one() const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem frobenius(const Elem& a) const;  // t0 + 2 t1 -> t0^2 + 2 t1^2
    int trace(const Elem& a) const;       // lands in Z4

    // 0 together with the powers of the Teichmuller unit; size 2^r
    const std::vector<Elem>& teichmuller() const { return teich_; }
    // all 4^r elements, enumerated as t0 + 2 t1 over Teichmuller pairs
    std::vector<Elem> all_elements() const;

private:
    std::pair<Elem, Elem> teich_decompose(const Elem& a) const;

    int r_;
    std::vector<int> h_;  // monic, degree r, coefficients mod 4
    std::vector<Elem> teich_;
};

// odd prime field helpers
bool is_prime(long p);
int legendre_symbol(long a, long p);

// ---- generators; every one is deterministic ----

// n-antipodal cover of the standard basis of C^d
PointSet cross_polytope(int d, int n = 2);

// orbit of the printed fiducial under the phase-extended Pauli group; 16 points
PointSet sic_d2();
// tensor-cube construction in Omega(8); 256 points
PointSet hoggar();

// Z4-linear Kerdock vectors plus scaled basis vectors; 4 d (d+1) points, d = 2^r
PointSet kerdock_code_set(int r);

enum class MubFamily { Even, Odd };
// 4-antipodal covers of the complex MUB families in dimension 2^r; the family
// must match the parity of r. Verifies unbiasedness across the extracted bases.
PointSet mub_cover(MubFamily family, int r);

PointSet coxeter_27();
PointSet coxeter_42();
PointSet coxeter_56();
PointSet coxeter_240();
PointSet coxeter_756();

// p^2 quadratic-phase vectors; optionally the standard basis appended
PointSet mub_odd_prime(long p, bool with_standard_basis = false);

// normalized characters restricted to the Singer difference set; q^2+q+1
// vectors in Omega(q+1), q prime
PointSet singer_design(long q);

// psi image of an orthogonal array / rank-r word list over {0..q} (0 = empty);
// verifies strength t = 2 by counting
PointSet oa_design(const std::vector<std::vector<int>>& rows, int q);

// classical OA(q^2, q+1, q, 2) from lines over GF(q), q prime
std::vector<std::vector<int>> oa_from_prime_lines(int q, int columns);

// embedding of the Paley-tournament scheme, q prime = 3 mod 4; q points in
// Omega((q-1)/2) with angles (-1 +- i sqrt(q))/(q-1)
PointSet paley_tournament_design(long q);

// 2d+1 points with Re(x^*y) = -1/(2d): a regular simplex in R^{2d} pulled back
PointSet regular_simplex_cover(int d);

}  // namespace cdl
