#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdl/design.hpp"
#include "cdl/pointset.hpp"
#include "cdl/zonal.hpp"

namespace cdl {

// Polynomial F with F(1) > 0 vanishing on a target angle set, carried with
// its Jacobi expansion and the lower set spanning its monomial support.
struct Annihilator {
    ZonalPoly poly;
    JacobiExpansion expansion;
    LowerSet span_set;
};

enum class BoundKind { AbsoluteDesign, AbsoluteCode, LpLower, LpUpper, Antipodal };

struct BoundCertificate {
    BoundKind kind;
    Rational value;                 // exact when the input data is rational
    std::string witness;            // description of the U/S/F used
    bool tight = false;
    std::vector<std::string> checks;  // side conditions verified, human-readable
    // antipodal bound diagnostics
    Rational branch_sn = 0, branch_rest = 0;
};

// Thm-4.2-style dimension sums
BigInt absolute_design_bound(int d, const LowerSet& U);
BigInt absolute_code_bound(int d, const LowerSet& S);

enum class LpMode { Lower, Upper };

// Delsarte bound F(1)/f_{0,0} with the mode's sign conditions verified first.
// Lower mode needs the design lower set T; both modes need the angle values.
// Throws std::invalid_argument with a diagnostic if a side condition fails.
BoundCertificate lp_bound(int d, const ZonalPoly& F, LpMode mode,
                          const std::vector<Complex>& angles,
                          const LowerSet* T = nullptr, double tol = 1e-9);

// Product annihilator by default; degree-(1,1) form when all moduli agree;
// least-squares fit in the monomial span of S_hint when provided.
Annihilator find_annihilator(int d, const AngleSet& A,
                             const std::optional<LowerSet>& S_hint = std::nullopt,
                             double tol = 1e-7);

// Lemma-5.4 family |X| <= F(1)/f_{k,l}; all coefficients must be positive
std::vector<std::pair<BiDegree, bool>> coefficient_bound_check(const Annihilator& ann, long x_size);

// n-antipodal bound: n * min over the S_n split, both branch values reported
BoundCertificate antipodal_bound(int d, const LowerSet& S, int n);

// Tightness per the code/design equivalence: (a) |X| = sum m_{k,l},
// (b) sum_S g_{k,l} annihilates A(X), (c) X is a cl(S*S)-design.
struct TightnessReport {
    bool size_equality = false;
    bool annihilator_vanishes = false;
    bool convolution_design = false;
    bool tight() const { return size_equality && annihilator_vanishes && convolution_design; }
    // any two conditions imply the third; false only on a genuine counterexample
    bool consistent() const {
        int c = size_equality + annihilator_vanishes + convolution_design;
        return c != 2;
    }
};

TightnessReport tightness_check(const PointSet& X, const LowerSet& S, double tol = kDesignTol);

}  // namespace cdl
