#include "cdl/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "cdl/threading.hpp"

namespace cdl {

std::vector<long> RelationPartition::valencies_at(int x) const {
    std::vector<long> out(s + 1, 0);
    for (int y = 0; y < n; ++y) ++out[rel(x, y)];
    return out;
}

RelationPartition relations(const PointSet& X) {
    AngleSet A = angle_set(X);
    RelationPartition out;
    out.n = X.size();
    out.s = A.degree();
    out.alphas.push_back(1.0);
    for (auto a : A.alphas) out.alphas.push_back(a);
    const Matrix G = X.gram();
    out.rel.resize(out.n, out.n);
    for (int i = 0; i < out.n; ++i)
        for (int j = 0; j < out.n; ++j) {
            if (i == j) { out.rel(i, j) = 0; continue; }
            auto idx = A.find(G(i, j), X.tol());
            if (!idx)
                throw std::runtime_error("relations: inner product escapes its own angle set");
            out.rel(i, j) = static_cast<int16_t>(*idx + 1);
        }
    out.tilde.resize(out.s + 1);
    for (int i = 0; i <= out.s; ++i) {
        Complex c = std::conj(out.alphas[i]);
        int found = -1;
        for (int j = 0; j <= out.s; ++j)
            if (std::abs(out.alphas[j] - c) < X.tol()) { found = j; break; }
        if (found < 0) throw std::runtime_error("relations: angle set not conjugation-closed");
        out.tilde[i] = found;
    }
    return out;
}

RelationPartition relation_partition_from_matrix(
    Eigen::Matrix<int16_t, Eigen::Dynamic, Eigen::Dynamic> rel, std::vector<Complex> alphas) {
    RelationPartition out;
    out.n = static_cast<int>(rel.rows());
    out.s = static_cast<int>(alphas.size()) - 1;
    out.alphas = std::move(alphas);
    out.rel = std::move(rel);
    for (int i = 0; i < out.n; ++i)
        if (out.rel(i, i) != 0) throw std::invalid_argument("relation matrix: diagonal must be class 0");
    // transpose pairing from the matrix itself
    out.tilde.assign(out.s + 1, -1);
    for (int i = 0; i <= out.s; ++i) {
        for (int j = 0; j <= out.s; ++j) {
            bool match = true;
            for (int x = 0; x < out.n && match; ++x)
                for (int y = 0; y < out.n && match; ++y)
                    if ((out.rel(x, y) == i) != (out.rel(y, x) == j)) match = false;
            if (match) { out.tilde[i] = j; break; }
        }
        if (out.tilde[i] < 0) throw std::invalid_argument("relation matrix: transpose of a class is not a class");
    }
    return out;
}

namespace {

// spectral pass: common eigenspaces of the adjacency algebra via a generic
// Hermitian member, then P, Q from traces
void spectral_fill(SchemeReport& rep, const RelationPartition& rel) {
    const int n = rel.n, m = rep.s + 1;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> unif(0.25, 1.0);
    std::vector<Complex> coef(m, 0.0);
    for (int i = 0; i < m; ++i) {
        if (coef[i] != Complex(0.0)) continue;
        if (rel.tilde[i] == i) {
            coef[i] = unif(rng);
        } else {
            Complex c(unif(rng), unif(rng));
            coef[i] = c;
            coef[rel.tilde[i]] = std::conj(c);
        }
    }
    Matrix H = Matrix::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) H(x, y) = coef[rel.rel(x, y)];
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    const auto& evals = es.eigenvalues();
    const auto& evecs = es.eigenvectors();
    // cluster eigenvalues at 1e-6
    std::vector<std::pair<double, std::vector<int>>> clusters;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (auto& c : clusters)
            if (std::abs(evals(i) - c.first) < 1e-6) {
                c.second.push_back(i);
                placed = true;
                break;
            }
        if (!placed) clusters.push_back({evals(i), {i}});
    }
    if (static_cast<int>(clusters.size()) != m)
        throw std::runtime_error("scheme spectral pass: eigenvalue clusters != class count (collision); retry seed");
    rep.idempotents.clear();
    for (auto& c : clusters) {
        Matrix V(n, c.second.size());
        for (std::size_t j = 0; j < c.second.size(); ++j) V.col(j) = evecs.col(c.second[j]);
        rep.idempotents.push_back(V * V.adjoint());
    }
    // put J/n first
    Matrix ones = Matrix::Constant(n, n, Complex(1.0 / n));
    std::sort(rep.idempotents.begin(), rep.idempotents.end(), [&](const Matrix& a, const Matrix& b) {
        return std::abs((a.cwiseProduct(ones.conjugate())).sum()) >
               std::abs((b.cwiseProduct(ones.conjugate())).sum());
    });
    rep.multiplicities.clear();
    for (const auto& E : rep.idempotents)
        rep.multiplicities.push_back(std::lround(E.trace().real()));
    rep.idem_transpose.assign(m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if ((rep.idempotents[i] - rep.idempotents[j].transpose()).cwiseAbs().maxCoeff() < 1e-7) {
                rep.idem_transpose[i] = j;
                break;
            }
    rep.P.resize(m, m);
    for (int i = 0; i < m; ++i) {
        Matrix Ai = Matrix::Zero(n, n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (rel.rel(x, y) == i) Ai(x, y) = 1.0;
        for (int j = 0; j < m; ++j)
            rep.P(j, i) = (rep.idempotents[j] * Ai).trace() / static_cast<double>(rep.multiplicities[j]);
    }
    rep.Q = static_cast<double>(n) * rep.P.inverse();
}

}  // namespace

SchemeReport check_scheme(const RelationPartition& rel, bool with_spectral) {
    SchemeReport rep;
    const int n = rel.n, m = rel.s + 1;
    rep.n = n;
    rep.s = rel.s;
    rep.alphas = rel.alphas;
    rep.tilde = rel.tilde;
    rep.closure.assign(m, std::vector<bool>(m, true));
    rep.p.assign(m, std::vector<std::vector<long>>(m, std::vector<long>(m, -1)));

    // one streaming pass: for each ordered pair (x,y), count composition types
    // through every z and compare with the class representative
    const auto& R = rel.rel;
    std::vector<std::vector<long>> counts(m, std::vector<long>(m));
    std::optional<SchemeWitness> witness;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int i = 0; i < m; ++i) std::fill(counts[i].begin(), counts[i].end(), 0L);
            for (int z = 0; z < n; ++z) ++counts[R(x, z)][R(z, y)];
            const int h = R(x, y);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    long& ref = rep.p[i][j][h];
                    if (ref < 0)
                        ref = counts[i][j];
                    else if (ref != counts[i][j] && rep.closure[i][j]) {
                        rep.closure[i][j] = false;
                        if (!witness) witness = SchemeWitness{i, j, x, y};
                    }
                }
        }
    }
    bool closed = true;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (!rep.closure[i][j]) closed = false;
    bool commutes = true;
    if (closed)
        for (int i = 0; i < m && commutes; ++i)
            for (int j = 0; j < m && commutes; ++j)
                for (int k = 0; k < m && commutes; ++k)
                    if (rep.p[i][j][k] != rep.p[j][i][k]) commutes = false;
    rep.is_scheme = closed && commutes;
    rep.witness = witness;
    rep.valencies.assign(m, 0);
    for (int y = 0; y < n; ++y) ++rep.valencies[R(0, y)];
    rep.symmetric = true;
    for (int i = 1; i <= rel.s; ++i)
        if (rel.tilde[i] != i) rep.symmetric = false;

    if (rep.is_scheme && with_spectral) spectral_fill(rep, rel);
    return rep;
}

std::vector<Matrix> idempotents_from_design(const PointSet& X, const LowerSet& U, double tol) {
    RelationPartition rel = relations(X);
    const std::size_t u = U.size();
    if (u != static_cast<std::size_t>(rel.s) && u != static_cast<std::size_t>(rel.s) + 1)
        throw std::invalid_argument("idempotents_from_design: |U| must be s or s+1");
    if (!is_design(X, convolve_closed(U, U), tol))
        throw std::invalid_argument("idempotents_from_design: X is not a U*U-design");
    const int n = X.size();
    std::vector<Matrix> adj(rel.s + 1, Matrix::Zero(n, n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) adj[rel.rel(x, y)](x, y) = 1.0;
    std::vector<Matrix> out;
    Matrix total = Matrix::Zero(n, n);
    for (const auto& deg : U.members()) {
        ZonalPoly g = jacobi(X.dim(), deg);
        Matrix F = Matrix::Zero(n, n);
        for (int i = 0; i <= rel.s; ++i) F += eval(g, rel.alphas[i]) * adj[i];
        F /= static_cast<double>(n);
        total += F;
        out.push_back(std::move(F));
    }
    if (u == static_cast<std::size_t>(rel.s))
        out.push_back(Matrix::Identity(n, n) - total);
    return out;
}

std::vector<std::vector<std::vector<Complex>>> krein(const SchemeReport& rep) {
    if (!rep.is_scheme) throw std::invalid_argument("krein: not a scheme");
    const int m = rep.s + 1;
    std::vector<std::vector<std::vector<Complex>>> q(
        m, std::vector<std::vector<Complex>>(m, std::vector<Complex>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Matrix EiEj = rep.idempotents[i].cwiseProduct(rep.idempotents[j]);
            for (int k = 0; k < m; ++k) {
                Complex v = (rep.idempotents[k].adjoint() * EiEj).trace();
                q[i][j][k] = static_cast<double>(rep.n) * v / static_cast<double>(rep.multiplicities[k]);
            }
        }
    return q;
}

FusionResult fusion_check(const SchemeReport& rep, const std::vector<std::vector<int>>& adj_partition,
                          const std::vector<std::vector<int>>& idem_partition, double tol) {
    if (adj_partition.size() != idem_partition.size())
        throw std::invalid_argument("fusion_check: partition sizes differ");
    const int t = static_cast<int>(adj_partition.size());
    FusionResult out;
    out.fused_Q.resize(t, t);
    out.valid = true;
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
            Complex first = 0.0;
            bool have = false;
            for (int r : adj_partition[a]) {
                Complex sum = 0.0;
                for (int c : idem_partition[b]) sum += rep.Q(r, c);
                if (!have) {
                    first = sum;
                    have = true;
                } else if (std::abs(sum - first) > tol) {
                    out.valid = false;
                }
            }
            out.fused_Q(a, b) = first;
        }
    return out;
}

SchemeReport quotient_scheme(const PointSet& X, const RelationPartition& rel, int n) {
    auto fibers = detect_antipodal(X, n);
    if (!fibers)
        throw std::invalid_argument("quotient_scheme: root-of-unity classes do not form an n-fiber equivalence");
    // fiber index per point
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / n);
    std::vector<int> fib(X.size(), -1);
    for (std::size_t f = 0; f < fibers->size(); ++f) {
        Vector v = X.point((*fibers)[f]);
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < X.size(); ++i)
                if (fib[i] < 0 && (X.point(i) - v).norm() < X.tol()) { fib[i] = static_cast<int>(f); break; }
            v = w * v;
        }
    }
    // classes merged by equal |alpha| among nonunimodular angles
    std::vector<double> mods;
    for (int i = 1; i <= rel.s; ++i) {
        double m = std::abs(rel.alphas[i]);
        if (std::abs(m - 1.0) < X.tol()) continue;
        bool seen = false;
        for (double x : mods)
            if (std::abs(x - m) < X.tol()) seen = true;
        if (!seen) mods.push_back(m);
    }
    std::sort(mods.begin(), mods.end(), std::greater<>());
    const int nf = static_cast<int>(fibers->size());
    Eigen::Matrix<int16_t, Eigen::Dynamic, Eigen::Dynamic> qrel(nf, nf);
    const Matrix G = X.gram();
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < nf; ++b) {
            if (a == b) { qrel(a, b) = 0; continue; }
            Complex v = G((*fibers)[a], (*fibers)[b]);
            int cls = -1;
            for (std::size_t t = 0; t < mods.size(); ++t)
                if (std::abs(std::abs(v) - mods[t]) < X.tol()) { cls = static_cast<int>(t); break; }
            if (cls < 0) throw std::runtime_error("quotient_scheme: cross-fiber angle is unimodular");
            qrel(a, b) = static_cast<int16_t>(cls + 1);
        }
    std::vector<Complex> qalphas{1.0};
    for (double m : mods) qalphas.push_back(m);
    auto qpart = relation_partition_from_matrix(std::move(qrel), std::move(qalphas));
    return check_scheme(qpart);
}

JacobiMatrix jacobi_matrix(int d, const std::vector<Complex>& angles, const LowerSet& U) {
    return jacobi_matrix(d, angles, U.graded_members());
}

JacobiMatrix jacobi_matrix(int d, const std::vector<Complex>& angles,
                           const std::vector<BiDegree>& cols) {
    if (angles.size() != cols.size())
        throw std::invalid_argument("jacobi_matrix: |angles| must equal |U|");
    const int m = static_cast<int>(cols.size());
    JacobiMatrix out;
    out.G.resize(m, m);
    Matrix M(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            out.G(i, j) = eval(jacobi(d, cols[j]), angles[i]);
            M(i, j) = std::pow(angles[i], cols[j].k) * std::pow(std::conj(angles[i]), cols[j].l);
        }
    out.det = out.G.determinant();
    out.det_monomial = M.determinant();
    return out;
}

InvarianceReport invariance_check(const PointSet& X) {
    RelationPartition rel = relations(X);
    InvarianceReport out;
    auto v0 = rel.valencies_at(0);
    for (int x = 1; x < rel.n; ++x)
        if (rel.valencies_at(x) != v0) return out;
    out.invariant = true;
    out.valencies = v0;
    return out;
}

PartialRegularityReport partial_regularity_scheme_check(const PointSet& X, const LowerSet& U,
                                                        const std::vector<int>& I, double tol) {
    if (I.size() != U.size())
        throw std::invalid_argument("partial_regularity_scheme_check: |I| must equal |U|");
    RelationPartition rel = relations(X);
    PartialRegularityReport out;
    out.design_ok = is_design(X, convolve_closed(U, U), tol);

    std::vector<bool> inI(rel.s + 1, false);
    for (int i : I) {
        if (i < 1 || i > rel.s)
            throw std::invalid_argument("partial_regularity_scheme_check: index outside 1..s");
        inI[i] = true;
    }
    // constancy and symmetry of p_{i,j}(x,y) whenever i or j is outside I
    const int n = rel.n, m = rel.s + 1;
    std::vector<std::vector<std::vector<long>>> p(
        m, std::vector<std::vector<long>>(m, std::vector<long>(m, -1)));
    out.outside_constant = true;
    std::vector<std::vector<long>> counts(m, std::vector<long>(m));
    for (int x = 0; x < n && out.outside_constant; ++x)
        for (int y = 0; y < n && out.outside_constant; ++y) {
            for (int i = 0; i < m; ++i) std::fill(counts[i].begin(), counts[i].end(), 0L);
            for (int z = 0; z < n; ++z) ++counts[rel.rel(x, z)][rel.rel(z, y)];
            const int h = rel.rel(x, y);
            for (int i = 0; i < m && out.outside_constant; ++i)
                for (int j = 0; j < m; ++j) {
                    if (inI[i] && inI[j]) continue;
                    if (counts[i][j] != counts[j][i]) { out.outside_constant = false; break; }
                    long& ref = p[i][j][h];
                    if (ref < 0)
                        ref = counts[i][j];
                    else if (ref != counts[i][j]) { out.outside_constant = false; break; }
                }
        }
    std::vector<Complex> rows;
    for (int i : I) rows.push_back(rel.alphas[i]);
    auto jm = jacobi_matrix(X.dim(), rows, U);
    out.jacobi_nonsingular = std::abs(jm.det) > 1e-9;
    return out;
}

PointSet embed_scheme(const SchemeReport& rep, int idem_index, double tol) {
    if (!rep.is_scheme) throw std::invalid_argument("embed_scheme: not a scheme");
    const Matrix& E = rep.idempotents.at(idem_index);
    const int n = rep.n;
    const long d = rep.multiplicities.at(idem_index);
    Eigen::SelfAdjointEigenSolver<Matrix> es(E);
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
    if (static_cast<long>(keep.size()) != d)
        throw std::invalid_argument("embed_scheme: idempotent rank mismatch");
    Matrix W(n, d);
    for (std::size_t j = 0; j < keep.size(); ++j) W.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
    // rows of W scaled to unit norm; (d/n) E = U U^* makes rows unit automatically
    Matrix pts = W;
    for (int i = 0; i < n; ++i) {
        double nrm = pts.row(i).norm();
        if (nrm < 1e-12) throw std::invalid_argument("embed_scheme: zero row");
        pts.row(i) /= nrm;
    }
    return PointSet(static_cast<int>(d), std::move(pts), tol);
}

std::vector<KreinDesignEntry> krein_design_check(const SchemeReport& rep, int idem_index,
                                                 const LowerSet& T, double tol) {
    auto q = krein(rep);
    const int m = rep.s + 1;
    const long d = rep.multiplicities.at(idem_index);
    const auto& ehat = rep.idem_transpose;
    // B[l'][l] = q_{e, l}^{l'}: one entrywise multiplication by |X| E_e
    Eigen::MatrixXcd B(m, m);
    for (int lp = 0; lp < m; ++lp)
        for (int l = 0; l < m; ++l) B(lp, l) = q[idem_index][l][lp];
    auto chain = [&](int len) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m);
        v(0) = 1.0;
        for (int i = 0; i < len; ++i) v = B * v;
        return v;
    };
    std::vector<KreinDesignEntry> out;
    for (const auto& deg : T.members()) {
        auto v = chain(deg.k);
        auto w = chain(deg.l);
        Complex sum = 0.0;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) sum += v(a) * std::conj(w(b)) * q[a][ehat[b]][0];
        KreinDesignEntry ent;
        ent.deg = deg;
        ent.moment_sum = sum;
        if (deg.k == deg.l) {
            Rational dr(d);
            Rational t = 1;
            for (int i = 0; i < 2 * deg.k; ++i) t *= dr;
            ent.target = t / Rational(binomial(static_cast<int>(d) + deg.k - 1, deg.k));
        } else {
            ent.target = 0;
        }
        ent.holds = std::abs(sum - Complex(to_double(ent.target))) <= tol * std::max(1.0, to_double(ent.target));
        out.push_back(ent);
    }
    return out;
}

bool is_skew_conference(const Eigen::MatrixXi& C) {
    const int n = static_cast<int>(C.rows());
    if (C.cols() != n) return false;
    for (int i = 0; i < n; ++i) {
        if (C(i, i) != 0) return false;
        for (int j = 0; j < n; ++j) {
            if (i != j && std::abs(C(i, j)) != 1) return false;
            if (C(j, i) != -C(i, j)) return false;
        }
    }
    Eigen::MatrixXi M = C * C.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M(i, j) != (i == j ? n - 1 : 0)) return false;
    return true;
}

std::optional<Eigen::MatrixXi> find_skew_conference(int n) {
    if (n < 2 || n % 2 != 0) return std::nullopt;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) idx.push_back({i, j});
    const std::size_t bits = idx.size();
    if (bits > 24) throw std::invalid_argument("find_skew_conference: order too large for exhaustive search");
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        Eigen::MatrixXi C = Eigen::MatrixXi::Zero(n, n);
        for (std::size_t b = 0; b < bits; ++b) {
            int v = (mask >> b) & 1 ? 1 : -1;
            C(idx[b].first, idx[b].second) = v;
            C(idx[b].second, idx[b].first) = -v;
        }
        if (is_skew_conference(C)) return C;
    }
    return std::nullopt;
}

PointSet conference_to_design(const Eigen::MatrixXi& C) {
    if (!is_skew_conference(C)) throw std::invalid_argument("conference_to_design: axioms fail");
    const int n = static_cast<int>(C.rows());
    const int d = n / 2;
    Matrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G(i, j) = (i == j ? Complex(1.0) : Complex(0.0, C(i, j) / std::sqrt(n - 1.0)));
    Eigen::SelfAdjointEigenSolver<Matrix> es(G);
    Matrix W(n, d);
    int col = 0;
    for (int i = 0; i < n; ++i)
        if (es.eigenvalues()(i) > 1e-9) {
            W.col(col++) = es.eigenvectors().col(i) * std::sqrt(es.eigenvalues()(i));
        }
    if (col != d) throw std::runtime_error("conference_to_design: Gram rank != n/2");
    for (int i = 0; i < n; ++i) W.row(i) /= W.row(i).norm();
    return PointSet(d, std::move(W), 1e-8);
}

Eigen::MatrixXi design_to_conference(const PointSet& L) {
    const int n = L.size();
    Matrix G = L.gram();
    Eigen::MatrixXi C(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) { C(i, j) = 0; continue; }
            Complex v = Complex(0.0, 1.0) * std::sqrt(n - 1.0) * (G(i, j) - Complex(i == j ? 1.0 : 0.0));
            double r = -v.real();  // i sqrt(n-1) (G - I) = -C
            if (std::abs(std::abs(r) - 1.0) > 1e-6 || std::abs(v.imag()) > 1e-6)
                throw std::invalid_argument("design_to_conference: Gram is not I + iC/sqrt(n-1)");
            C(i, j) = r > 0 ? 1 : -1;
        }
    if (!is_skew_conference(C)) throw std::invalid_argument("design_to_conference: extracted C fails axioms");
    return C;
}

}  // namespace cdl
