#include "cdl/bounds.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cdl {

BigInt absolute_design_bound(int d, const LowerSet& U) {
    BigInt s = 0;
    for (const auto& deg : U.members()) s += harm_dim(d, deg);
    return s;
}

BigInt absolute_code_bound(int d, const LowerSet& S) {
    BigInt s = 0;
    for (const auto& deg : S.members()) s += harm_dim(d, deg);
    return s;
}

BoundCertificate lp_bound(int d, const ZonalPoly& F, LpMode mode,
                          const std::vector<Complex>& angles, const LowerSet* T, double tol) {
    JacobiExpansion e = expand(d, F);
    Rational f00 = e.coeff({0, 0});
    if (f00 <= 0) throw std::invalid_argument("lp_bound: f_{0,0} must be positive");

    BoundCertificate cert;
    cert.kind = mode == LpMode::Lower ? BoundKind::LpLower : BoundKind::LpUpper;

    if (mode == LpMode::Lower) {
        if (!T) throw std::invalid_argument("lp_bound: lower mode needs the design set T");
        for (const auto& [deg, c] : e.terms)
            if (!T->contains(deg) && c > 0) {
                throw std::invalid_argument("lp_bound: coefficient at " + to_string(deg) +
                                            " is positive outside T");
            }
        cert.checks.push_back("f_{k,l} <= 0 off " + to_string(*T));
        for (auto a : angles) {
            Complex v = eval(F, a);
            if (std::abs(v.imag()) > tol)
                throw std::invalid_argument("lp_bound: F not real at an angle");
            if (v.real() < -tol)
                throw std::invalid_argument("lp_bound: F(alpha) < 0 at alpha = " +
                                            std::to_string(a.real()) + "+" + std::to_string(a.imag()) + "i");
            if (std::abs(v.real()) <= tol && v.real() < 0) {
                // sign ambiguous within tolerance: fail closed
                throw std::invalid_argument("lp_bound: F(alpha) ambiguous at tolerance");
            }
        }
        cert.checks.push_back("F(alpha) >= 0 on all angles");
    } else {
        for (const auto& [deg, c] : e.terms)
            if (c < 0)
                throw std::invalid_argument("lp_bound: negative coefficient at " + to_string(deg));
        cert.checks.push_back("f_{k,l} >= 0 everywhere");
        for (auto a : angles) {
            Complex v = eval(F, a);
            if (std::abs(v.imag()) > tol)
                throw std::invalid_argument("lp_bound: F not real at an angle");
            if (v.real() > tol)
                throw std::invalid_argument("lp_bound: F(alpha) > 0 at alpha = " +
                                            std::to_string(a.real()) + "+" + std::to_string(a.imag()) + "i");
        }
        cert.checks.push_back("F(alpha) <= 0 on all angles");
    }
    Rational F1 = 0;
    for (const auto& [deg, c] : e.terms) F1 += c * Rational(harm_dim(d, deg));
    cert.value = F1 / f00;
    std::ostringstream w;
    w << "F(1) = " << rational_string(F1) << ", f00 = " << rational_string(f00);
    cert.witness = w.str();
    return cert;
}

namespace {

LowerSet monomial_span(const ZonalPoly& F) {
    std::vector<BiDegree> degs;
    for (const auto& [key, c] : F.coeffs()) degs.push_back({key.first, key.second});
    return LowerSet::closure(degs);
}

}  // namespace

Annihilator find_annihilator(int d, const AngleSet& A, const std::optional<LowerSet>& S_hint,
                             double tol) {
    if (A.alphas.empty()) throw std::invalid_argument("find_annihilator: empty angle set");

    auto finish = [&](ZonalPoly F) {
        Annihilator ann;
        ann.expansion = expand(d, F);
        ann.span_set = monomial_span(F);
        ann.poly = std::move(F);
        Complex at1 = eval(ann.poly, 1.0);
        if (at1.real() <= tol)
            throw std::invalid_argument("find_annihilator: F(1) not positive");
        for (auto a : A.alphas)
            if (std::abs(eval(ann.poly, a)) > tol * 100)
                throw std::invalid_argument("find_annihilator: residual at an angle exceeds tolerance");
        return ann;
    };

    if (S_hint) {
        // real-coefficient fit: each angle contributes two real equations
        auto degs = S_hint->graded_members();
        const int m = static_cast<int>(degs.size());
        const int na = static_cast<int>(A.alphas.size());
        Eigen::MatrixXd M(2 * na + 1, m);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * na + 1);
        for (int i = 0; i < na; ++i) {
            Complex a = A.alphas[i];
            for (int j = 0; j < m; ++j) {
                Complex v = std::pow(a, degs[j].k) * std::pow(std::conj(a), degs[j].l);
                M(2 * i, j) = v.real();
                M(2 * i + 1, j) = v.imag();
            }
        }
        for (int j = 0; j < m; ++j) M(2 * na, j) = 1.0;  // F(1) = 1
        rhs(2 * na) = 1.0;
        Eigen::VectorXd c = M.colPivHouseholderQr().solve(rhs);
        double resid = (M * c - rhs).norm();
        if (resid > tol)
            throw std::invalid_argument("find_annihilator: no annihilator in span of hint (residual " +
                                        std::to_string(resid) + ")");
        ZonalPoly F(d);
        for (int j = 0; j < m; ++j) {
            // snap tiny coefficients; representation stays rational
            double v = c(j);
            if (std::abs(v) > 1e-10)
                F.add_term(degs[j].k, degs[j].l,
                           Rational(BigInt(std::llround(v * 1e12)), BigInt(1000000000000LL)));
        }
        return finish(std::move(F));
    }

    // all moduli equal: x xbar - |alpha|^2
    bool equal_mod = true;
    double m0 = std::abs(A.alphas.front());
    for (auto a : A.alphas)
        if (std::abs(std::abs(a) - m0) > tol) { equal_mod = false; break; }
    if (equal_mod) {
        ZonalPoly F(d);
        F.add_term(1, 1, 1);
        F.add_term(0, 0, -Rational(BigInt(std::llround(m0 * m0 * 1e12)), BigInt(1000000000000LL)));
        return finish(std::move(F));
    }

    // product form prod (x - alpha): conjugate-closed angle set gives real coefficients
    std::vector<Complex> poly{1.0};  // coefficients in x, ascending degree
    for (auto a : A.alphas) {
        std::vector<Complex> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= a * poly[i];
        }
        poly = std::move(next);
    }
    ZonalPoly F(d);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (std::abs(poly[i].imag()) > tol)
            throw std::invalid_argument("find_annihilator: angle set not conjugation-closed");
        if (std::abs(poly[i].real()) > 1e-12)
            F.add_term(static_cast<int>(i), 0,
                       Rational(BigInt(std::llround(poly[i].real() * 1e12)), BigInt(1000000000000LL)));
    }
    return finish(std::move(F));
}

std::vector<std::pair<BiDegree, bool>> coefficient_bound_check(const Annihilator& ann, long x_size) {
    Rational F1 = 0;
    const int d = ann.poly.dim();
    for (const auto& [deg, c] : ann.expansion.terms) {
        if (c <= 0)
            throw std::invalid_argument("coefficient_bound_check: nonpositive coefficient at " +
                                        to_string(deg));
        F1 += c * Rational(harm_dim(d, deg));
    }
    std::vector<std::pair<BiDegree, bool>> out;
    for (const auto& [deg, c] : ann.expansion.terms)
        out.push_back({deg, Rational(x_size) <= F1 / c});
    return out;
}

BoundCertificate antipodal_bound(int d, const LowerSet& S, int n) {
    if (n < 2) throw std::invalid_argument("antipodal_bound: n must be >= 2");
    BigInt sn = 0, rest = 0;
    for (const auto& deg : S.members()) {
        if (((deg.k - deg.l) % n + n) % n == 0)
            sn += harm_dim(d, deg);
        else
            rest += harm_dim(d, deg);
    }
    BoundCertificate cert;
    cert.kind = BoundKind::Antipodal;
    cert.branch_sn = Rational(sn);
    cert.branch_rest = Rational(rest);
    cert.value = Rational(n) * Rational(std::min(sn, rest));
    cert.witness = "S_n sum " + sn.str() + ", complement sum " + rest.str();
    return cert;
}

TightnessReport tightness_check(const PointSet& X, const LowerSet& S, double tol) {
    TightnessReport rep;
    rep.size_equality = (BigInt(X.size()) == absolute_code_bound(X.dim(), S));

    ZonalPoly F(X.dim());
    for (const auto& deg : S.members()) F += jacobi(X.dim(), deg);
    AngleSet A = angle_set(X);
    rep.annihilator_vanishes = true;
    double scale = to_double(Rational(absolute_code_bound(X.dim(), S)));
    for (auto a : A.alphas)
        if (std::abs(eval(F, a)) > 1e-9 * scale * 10) { rep.annihilator_vanishes = false; break; }

    rep.convolution_design = is_design(X, convolve_closed(S, S), tol);
    return rep;
}

}  // namespace cdl
