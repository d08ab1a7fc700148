#include "cdl/design.hpp"

#include <cmath>
#include <stdexcept>

#include "cdl/threading.hpp"

namespace cdl {

namespace {

// sum over all ordered pairs of a zonal polynomial evaluated at the Gram entries
Complex pair_sum(const Matrix& G, const ZonalPoly& p) {
    const long n = G.rows();
    auto chunk = [&](long lo, long hi) {
        Complex acc = 0.0;
        for (long i = lo; i < hi; ++i)
            for (long j = 0; j < n; ++j) acc += eval(p, G(i, j));
        return acc;
    };
    return parallel_reduce<Complex>(n, Complex(0.0), chunk,
                                    [](Complex a, Complex b) { return a + b; });
}

}  // namespace

double zonal_pair_sum(const PointSet& X, BiDegree deg) {
    return pair_sum(X.gram(), jacobi(X.dim(), deg)).real();
}

double design_residual(const PointSet& X, BiDegree deg) {
    if (deg == BiDegree{0, 0})
        throw std::invalid_argument("design_residual: (0,0) has no residual");
    Complex s = pair_sum(X.gram(), jacobi(X.dim(), deg));
    double norm = static_cast<double>(X.size()) * to_double(Rational(harm_dim(X.dim(), deg)));
    return std::abs(s) / norm;
}

DesignReport design_report(const PointSet& X, const LowerSet& T, double tol) {
    DesignReport rep;
    rep.tol = tol;
    const Matrix G = X.gram();
    int cutoff = 0;
    std::set<BiDegree> passing{{0, 0}};
    for (const auto& deg : T.members()) {
        if (deg == BiDegree{0, 0}) continue;
        cutoff = std::max(cutoff, deg.total());
        double rho;
        auto conj_it = rep.residuals.find(deg.conj());
        if (conj_it != rep.residuals.end()) {
            rho = conj_it->second;  // conjugate pair sums have equal magnitude
        } else {
            Complex s = pair_sum(G, jacobi(X.dim(), deg));
            rho = std::abs(s) / (X.size() * to_double(Rational(harm_dim(X.dim(), deg))));
        }
        rep.residuals[deg] = rho;
        if (rho <= tol) passing.insert(deg);
    }
    rep.cutoff = cutoff;
    // verdict = members all of whose dominated degrees pass
    std::set<BiDegree> verdict;
    for (const auto& deg : T.members()) {
        bool ok = true;
        for (int a = 0; a <= deg.k && ok; ++a)
            for (int b = 0; b <= deg.l && ok; ++b)
                if (T.contains({a, b}) && !passing.count({a, b})) ok = false;
        if (ok) verdict.insert(deg);
    }
    rep.verdict = LowerSet(std::move(verdict));
    return rep;
}

bool is_design(const PointSet& X, const LowerSet& T, double tol) {
    auto rep = design_report(X, T, tol);
    for (const auto& [deg, rho] : rep.residuals)
        if (rho > tol) return false;
    return true;
}

DesignReport max_design_strength(const PointSet& X, int cutoff, double tol) {
    if (cutoff < 1) throw std::invalid_argument("max_design_strength: cutoff must be >= 1");
    auto rep = design_report(X, LowerSet::total_degree(cutoff), tol);
    rep.cutoff = cutoff;
    return rep;
}

Complex moment(const PointSet& X, BiDegree deg) {
    const Matrix G = X.gram();
    const long n = G.rows();
    auto chunk = [&](long lo, long hi) {
        Complex acc = 0.0;
        for (long i = lo; i < hi; ++i)
            for (long j = 0; j < n; ++j) {
                Complex v = G(i, j);
                Complex term = 1.0;
                for (int a = 0; a < deg.k; ++a) term *= v;
                Complex vc = std::conj(v);
                for (int b = 0; b < deg.l; ++b) term *= vc;
                acc += term;
            }
        return acc;
    };
    Complex s = parallel_reduce<Complex>(n, Complex(0.0), chunk,
                                         [](Complex a, Complex b) { return a + b; });
    return s / (static_cast<double>(n) * static_cast<double>(n));
}

Rational sphere_moment(int d, BiDegree deg) {
    if (deg.k != deg.l) return 0;
    return Rational(1, binomial(d + deg.k - 1, deg.k));
}

bool regularity_check(const PointSet& X, BiDegree deg, double tol) {
    Complex m = moment(X, deg);
    return std::abs(m - Complex(to_double(sphere_moment(X.dim(), deg)))) <= tol;
}

bool real_design_check(const PointSet& X, int t, double tol) {
    if (t < 1) throw std::invalid_argument("real_design_check: t must be >= 1");
    const Matrix G = X.gram();
    const long n = G.rows();
    const int d2 = 2 * X.dim();
    for (int i = 1; i <= t; ++i) {
        auto q = gegenbauer(d2, i);
        auto chunk = [&](long lo, long hi) {
            double acc = 0.0;
            for (long a = lo; a < hi; ++a)
                for (long b = 0; b < n; ++b) acc += gegenbauer_eval(q, G(a, b).real());
            return acc;
        };
        double s = parallel_reduce<double>(n, 0.0, chunk, [](double a, double b) { return a + b; });
        double m = gegenbauer_eval(q, 1.0);  // Q_{2d,i}(1) normalizes like g(1)
        if (std::abs(s) / (n * m) > tol) return false;
    }
    return true;
}

}  // namespace cdl
