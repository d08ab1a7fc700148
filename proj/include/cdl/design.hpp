#pragma once

#include <map>

#include "cdl/bidegree.hpp"
#include "cdl/pointset.hpp"

namespace cdl {

// Verdict of a design-strength scan: residual per bidegree plus the maximal
// lower set whose nonzero members all pass.
struct DesignReport {
    std::map<BiDegree, double> residuals;
    LowerSet verdict;
    int cutoff = 0;
    double tol = 0.0;
};

inline constexpr double kDesignTol = 1e-7;

// rho_{k,l} = |sum_{x,y} g_{k,l}(x^* y)| / (|X| g_{k,l}(1)); rejects (0,0)
double design_residual(const PointSet& X, BiDegree deg);

// raw zonal double sum, real up to roundoff and >= 0
double zonal_pair_sum(const PointSet& X, BiDegree deg);

bool is_design(const PointSet& X, const LowerSet& T, double tol = kDesignTol);
DesignReport design_report(const PointSet& X, const LowerSet& T, double tol = kDesignTol);

// maximal lower set within {k+l <= cutoff} whose nonzero members all pass
DesignReport max_design_strength(const PointSet& X, int cutoff = 8, double tol = kDesignTol);

// (1/|X|^2) sum (x^*y)^k (y^*x)^l
Complex moment(const PointSet& X, BiDegree deg);

// sphere average of (x^*y)^k (y^*x)^l: 1/C(d+k-1, k) on the diagonal, else 0.
// The binomial index k (not k-1) is fixed by the Omega(d) integral of |z_1|^{2k}
// and confirmed by the cross-polytope oracle moment(1,1) = 1/d.
Rational sphere_moment(int d, BiDegree deg);

// moment-based (k,l)-regularity test, independent of design_residual
bool regularity_check(const PointSet& X, BiDegree deg, double tol = kDesignTol);

// Gegenbauer sums over the real embedding phi(X) in S^{2d-1}
bool real_design_check(const PointSet& X, int t, double tol = kDesignTol);

}  // namespace cdl
