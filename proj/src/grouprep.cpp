#include "cdl/grouprep.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace cdl {

namespace {

std::vector<long> round_key(const Matrix& M) {
    std::vector<long> key;
    key.reserve(2 * M.size());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) {
            key.push_back(std::lround(M(i, j).real() * 1e6));
            key.push_back(std::lround(M(i, j).imag() * 1e6));
        }
    return key;
}

}  // namespace

FiniteUnitaryGroup close_group(const std::vector<Matrix>& generators, int cap) {
    if (generators.empty()) throw std::invalid_argument("close_group: no generators");
    const int d = static_cast<int>(generators.front().rows());
    for (const auto& g : generators) {
        if (g.rows() != d || g.cols() != d)
            throw std::invalid_argument("close_group: generator shape mismatch");
        if ((g.adjoint() * g - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
            throw std::invalid_argument("close_group: generator is not unitary");
    }
    FiniteUnitaryGroup G;
    G.dim = d;
    std::map<std::vector<long>, int> seen;
    auto insert = [&](const Matrix& M) {
        auto key = round_key(M);
        auto it = seen.find(key);
        if (it != seen.end()) {
            // collision re-check at full tolerance
            if ((G.elements[it->second] - M).cwiseAbs().maxCoeff() < 1e-8) return false;
        }
        seen.emplace(std::move(key), static_cast<int>(G.elements.size()));
        G.elements.push_back(M);
        return true;
    };
    insert(Matrix::Identity(d, d));
    std::vector<Matrix> frontier{Matrix::Identity(d, d)};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& M : frontier)
            for (const auto& g : generators) {
                Matrix P = g * M;
                if (insert(P)) {
                    next.push_back(P);
                    if (static_cast<int>(G.elements.size()) > cap)
                        throw std::runtime_error("close_group: cap exceeded");
                }
            }
        frontier = std::move(next);
    }
    return G;
}

FiniteUnitaryGroup pauli_group(int d) {
    if (d < 2) throw std::invalid_argument("pauli_group: d must be >= 2");
    Matrix Px = Matrix::Zero(d, d), Pz = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        Px((i + 1) % d, i) = 1.0;
        Pz(i, i) = std::polar(1.0, 2 * std::numbers::pi * i / d);
    }
    auto G = close_group({Px, Pz}, d * d * d + 8);
    G.provenance = "pauli " + std::to_string(d);
    return G;
}

PointSet orbit(const FiniteUnitaryGroup& G, const Vector& x, double tol) {
    if (std::abs(x.norm() - 1.0) > 1e-10) throw std::invalid_argument("orbit: x must be a unit vector");
    std::vector<Vector> vs;
    std::set<std::vector<long>> seen;
    for (const auto& g : G.elements) {
        Vector v = g * x;
        std::vector<long> key;
        for (int i = 0; i < v.size(); ++i) {
            key.push_back(std::lround(v(i).real() * 1e7));
            key.push_back(std::lround(v(i).imag() * 1e7));
        }
        if (seen.insert(std::move(key)).second) vs.push_back(v);
    }
    Matrix pts(static_cast<Eigen::Index>(vs.size()), G.dim);
    for (std::size_t i = 0; i < vs.size(); ++i) pts.row(static_cast<Eigen::Index>(i)) = vs[i];
    return PointSet(G.dim, std::move(pts), tol);
}

namespace {

// complete homogeneous symmetric polynomials of the eigenvalues up to degree
// kmax, via the Newton-identity recurrence on power sums
std::vector<Complex> complete_homogeneous(const Vector& eigs, int kmax) {
    std::vector<Complex> p(kmax + 1, 0.0);
    for (int j = 1; j <= kmax; ++j)
        for (int i = 0; i < eigs.size(); ++i) p[j] += std::pow(eigs(i), j);
    std::vector<Complex> h(kmax + 1, 0.0);
    h[0] = 1.0;
    for (int m = 1; m <= kmax; ++m) {
        Complex acc = 0.0;
        for (int j = 1; j <= m; ++j) acc += p[j] * h[m - j];
        h[m] = acc / static_cast<double>(m);
    }
    return h;
}

long round_guarded(double v, const char* what) {
    double r = std::round(v);
    if (std::abs(v - r) > 1e-6)
        throw std::runtime_error(std::string(what) + ": value " + std::to_string(v) +
                                 " not within 1e-6 of an integer (numerically unreliable group)");
    return std::lround(r);
}

struct GroupSeries {
    // per element: h_k(lams) and h_l(conj lams)
    std::vector<std::vector<Complex>> hk, hl;
};

GroupSeries element_series(const FiniteUnitaryGroup& G, int kmax, int lmax) {
    GroupSeries out;
    out.hk.reserve(G.elements.size());
    out.hl.reserve(G.elements.size());
    for (const auto& g : G.elements) {
        Eigen::ComplexEigenSolver<Matrix> es(g);
        Vector eigs = es.eigenvalues();
        out.hk.push_back(complete_homogeneous(eigs, kmax));
        out.hl.push_back(complete_homogeneous(eigs.conjugate(), lmax));
    }
    return out;
}

}  // namespace

MolienTable molien_hom(const FiniteUnitaryGroup& G, int kmax, int lmax) {
    auto series = element_series(G, kmax, lmax);
    MolienTable out;
    out.kmax = kmax;
    out.lmax = lmax;
    out.kind = MolienTable::Kind::HomInvariants;
    const double order = static_cast<double>(G.order());
    for (int k = 0; k <= kmax; ++k)
        for (int l = 0; l <= lmax; ++l) {
            Complex acc = 0.0;
            for (std::size_t e = 0; e < series.hk.size(); ++e) acc += series.hk[e][k] * series.hl[e][l];
            acc /= order;
            if (std::abs(acc.imag()) > 1e-6) throw std::runtime_error("molien_hom: non-real average");
            out.entries[{k, l}] = round_guarded(acc.real(), "molien_hom");
        }
    return out;
}

MolienTable molien_harm(const FiniteUnitaryGroup& G, int kmax, int lmax) {
    // route 1: difference of Hom dimensions
    MolienTable hom = molien_hom(G, kmax, lmax);
    MolienTable out;
    out.kmax = kmax;
    out.lmax = lmax;
    out.kind = MolienTable::Kind::HarmInvariants;
    for (int k = 0; k <= kmax; ++k)
        for (int l = 0; l <= lmax; ++l) {
            long v = hom.at({k, l});
            if (k >= 1 && l >= 1) v -= hom.at({k - 1, l - 1});
            out.entries[{k, l}] = v;
        }
    // route 2: (1 - xy)-weighted per-element series, averaged then rounded
    auto series = element_series(G, kmax, lmax);
    const double order = static_cast<double>(G.order());
    for (int k = 0; k <= kmax; ++k)
        for (int l = 0; l <= lmax; ++l) {
            Complex acc = 0.0;
            for (std::size_t e = 0; e < series.hk.size(); ++e) {
                Complex v = series.hk[e][k] * series.hl[e][l];
                if (k >= 1 && l >= 1) v -= series.hk[e][k - 1] * series.hl[e][l - 1];
                acc += v;
            }
            long r = round_guarded((acc / order).real(), "molien_harm");
            if (r != out.entries[{k, l}])
                throw std::runtime_error("molien_harm: difference and series routes disagree at " +
                                         to_string(BiDegree{k, l}));
        }
    return out;
}

bool harm_irreducible(const FiniteUnitaryGroup& G, BiDegree deg) {
    const int k = deg.k, l = deg.l;
    auto series = element_series(G, k, l);
    double norm = 0.0;
    double coeff4 = 0.0;  // four-determinant coefficient = sum of |chi_Hom|^2
    for (std::size_t e = 0; e < series.hk.size(); ++e) {
        Complex hom = series.hk[e][k] * series.hl[e][l];
        Complex chi = hom;
        if (k >= 1 && l >= 1) chi -= series.hk[e][k - 1] * series.hl[e][l - 1];
        norm += std::norm(chi);
        coeff4 += std::norm(hom);
    }
    norm /= G.order();
    coeff4 /= G.order();
    long n = round_guarded(norm, "harm_irreducible");
    // cross-check: the four-determinant coefficient equals min(k,l)+1 exactly
    // when every diagonal shift Harm(k-i, l-i) is distinct and irreducible
    long c4 = round_guarded(coeff4, "harm_irreducible (four-determinant route)");
    if (c4 == std::min(k, l) + 1 && n != 1)
        throw std::runtime_error("harm_irreducible: routes inconsistent at " + to_string(deg));
    return n == 1;
}

OrbitDesignStrength orbit_design_strength(const FiniteUnitaryGroup& G, const LowerSet& U, int cutoff,
                                          double tol) {
    OrbitDesignStrength out;
    MolienTable harm = molien_harm(G, cutoff, cutoff);
    {
        std::set<BiDegree> inv;
        for (const auto& deg : U.members())
            if (deg == BiDegree{0, 0} || harm.at(deg) == 0) inv.insert(deg);
        // keep the downward-closed passing part
        std::set<BiDegree> keep;
        for (const auto& deg : inv) {
            bool ok = true;
            for (int a = 0; a <= deg.k && ok; ++a)
                for (int b = 0; b <= deg.l && ok; ++b)
                    if (U.contains({a, b}) && !inv.count({a, b})) ok = false;
            if (ok) keep.insert(deg);
        }
        out.invariant_guarantee = LowerSet(std::move(keep));
    }
    {
        std::set<BiDegree> irr;
        for (const auto& deg : U.members())
            if (deg == BiDegree{0, 0} || harm_irreducible(G, deg)) irr.insert(deg);
        std::set<BiDegree> keep;
        for (const auto& deg : irr) {
            bool ok = true;
            for (int a = 0; a <= deg.k && ok; ++a)
                for (int b = 0; b <= deg.l && ok; ++b)
                    if (U.contains({a, b}) && !irr.count({a, b})) ok = false;
            if (ok) keep.insert(deg);
        }
        LowerSet Uirr(std::move(keep));
        out.irreducible_guarantee = convolve_closed(Uirr, Uirr);
    }
    {
        // deterministic sample orbit
        Vector x = Vector::Zero(G.dim);
        for (int i = 0; i < G.dim; ++i)
            x(i) = Complex(std::cos(1.0 + i), std::sin(0.5 + 2.0 * i));
        x /= x.norm();
        out.empirical = max_design_strength(orbit(G, x), cutoff, tol).verdict;
    }
    return out;
}

}  // namespace cdl
