#include "cdl/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cdl {

PointSet::PointSet(int dim, Matrix points, double tol) : dim_(dim), points_(std::move(points)), tol_(tol) {
    if (dim_ < 1) throw std::invalid_argument("PointSet: dimension must be >= 1");
    if (points_.cols() != dim_) throw std::invalid_argument("PointSet: column count != dimension");
    if (points_.rows() == 0) throw std::invalid_argument("PointSet: empty");
    for (int i = 0; i < points_.rows(); ++i) {
        double n = points_.row(i).norm();
        if (std::abs(n - 1.0) > 1e-12)
            throw std::invalid_argument("PointSet: point " + std::to_string(i) + " has norm " + std::to_string(n));
    }
    // duplicates at tolerance are rejected; |x^*y - 1| small means x ~ y
    Matrix G = gram();
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (std::abs(G(i, j) - 1.0) < tol_)
                throw std::invalid_argument("PointSet: points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide at tolerance");
}

std::vector<Complex> AngleSet::interior(double tol) const {
    std::vector<Complex> out;
    for (auto a : alphas)
        if (std::abs(a) < 1.0 - tol) out.push_back(a);
    return out;
}

std::optional<int> AngleSet::find(Complex value, double tol) const {
    for (std::size_t i = 0; i < alphas.size(); ++i)
        if (std::abs(alphas[i] - value) < tol) return static_cast<int>(i);
    return std::nullopt;
}

AngleSet angle_set(const PointSet& X) {
    const Matrix G = X.gram();
    const double tol = X.tol();
    // single-linkage clustering at radius tol; representative = cluster mean
    struct Cluster {
        Complex sum;
        long count;
        std::vector<Complex> members;
    };
    std::vector<Cluster> clusters;
    for (int i = 0; i < X.size(); ++i) {
        for (int j = 0; j < X.size(); ++j) {
            if (i == j) continue;
            Complex v = G(i, j);
            if (std::abs(v - 1.0) < tol)
                throw std::invalid_argument("angle_set: duplicate points (off-diagonal angle 1)");
            bool placed = false;
            for (auto& c : clusters) {
                for (auto m : c.members)
                    if (std::abs(v - m) < tol) { placed = true; break; }
                if (placed) {
                    c.sum += v;
                    c.count += 1;
                    if (c.members.size() < 64) c.members.push_back(v);
                    break;
                }
            }
            if (!placed) clusters.push_back({v, 1, {v}});
        }
    }
    std::vector<std::pair<Complex, long>> reps;
    reps.reserve(clusters.size());
    for (const auto& c : clusters) reps.push_back({c.sum / static_cast<double>(c.count), c.count});
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        double ma = std::abs(a.first), mb = std::abs(b.first);
        if (std::abs(ma - mb) > 1e-12) return ma > mb;
        double pa = std::arg(a.first), pb = std::arg(b.first);
        if (pa < -1e-12) pa += 2 * std::numbers::pi;
        if (pb < -1e-12) pb += 2 * std::numbers::pi;
        return pa < pb;
    });
    AngleSet out;
    for (const auto& [v, c] : reps) {
        out.alphas.push_back(v);
        out.counts.push_back(c);
    }
    return out;
}

PointSet antipodal_cover(const PointSet& L, int n) {
    if (n < 2) throw std::invalid_argument("antipodal_cover: n must be >= 2");
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / n);
    // collision check: no two points of L may differ by an n-th root of unity
    const Matrix G = L.gram();
    for (int i = 0; i < L.size(); ++i)
        for (int j = i + 1; j < L.size(); ++j)
            for (int k = 0; k < n; ++k)
                if (std::abs(G(i, j) - std::pow(w, k)) < L.tol())
                    throw std::invalid_argument("antipodal_cover: points " + std::to_string(i) + "," +
                                                std::to_string(j) + " collide under root-of-unity multiplication");
    Matrix out(static_cast<Eigen::Index>(L.size()) * n, L.dim());
    Complex wk = 1.0;
    for (int k = 0; k < n; ++k) {
        out.block(static_cast<Eigen::Index>(k) * L.size(), 0, L.size(), L.dim()) = wk * L.points();
        wk *= w;
    }
    return PointSet(L.dim(), std::move(out), L.tol());
}

std::optional<std::vector<int>> detect_antipodal(const PointSet& X, int n) {
    if (n < 2 || X.size() % n != 0) return std::nullopt;
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / n);
    const int m = X.size();
    std::vector<int> fiber(m, -1);
    std::vector<int> reps;
    // successor under multiplication by w
    std::vector<int> succ(m, -1);
    for (int i = 0; i < m; ++i) {
        Vector v = w * X.point(i);
        for (int j = 0; j < m; ++j)
            if ((X.point(j) - v).norm() < X.tol()) { succ[i] = j; break; }
        if (succ[i] < 0) return std::nullopt;
    }
    for (int i = 0; i < m; ++i) {
        if (fiber[i] >= 0) continue;
        int f = static_cast<int>(reps.size());
        reps.push_back(i);
        int cur = i, steps = 0;
        while (fiber[cur] < 0) {
            fiber[cur] = f;
            cur = succ[cur];
            ++steps;
        }
        if (cur != i || steps != n) return std::nullopt;  // orbit size must be exactly n
    }
    return reps;
}

Eigen::MatrixXd embed_real(const PointSet& X) {
    Eigen::MatrixXd out(X.size(), 2 * X.dim());
    for (int i = 0; i < X.size(); ++i)
        for (int j = 0; j < X.dim(); ++j) {
            out(i, 2 * j) = X.points()(i, j).real();
            out(i, 2 * j + 1) = X.points()(i, j).imag();
        }
    return out;
}

namespace {

// unitary with U z = e_1
Matrix householder_to_e1(const Vector& z) {
    const int d = static_cast<int>(z.size());
    Matrix U = Matrix::Identity(d, d);
    Complex phase = std::abs(z(0)) > 1e-12 ? z(0) / std::abs(z(0)) : Complex(1.0);
    Vector u = z;
    u(0) -= phase;
    double nu = u.norm();
    if (nu > 1e-12) {
        u /= nu;
        U -= 2.0 * u * u.adjoint();
    }
    return U / phase;
}

}  // namespace

PointSet derived_code(const PointSet& X, int z_index, Complex alpha) {
    if (z_index < 0 || z_index >= X.size()) throw std::invalid_argument("derived_code: bad point index");
    if (X.dim() < 2) throw std::invalid_argument("derived_code: dimension must be >= 2");
    if (std::abs(alpha) >= 1.0 - X.tol())
        throw std::invalid_argument("derived_code: |alpha| must be < 1");
    const Vector z = X.point(z_index);
    const Matrix U = householder_to_e1(z);
    const double scale = 1.0 / std::sqrt(1.0 - std::norm(alpha));
    std::vector<Vector> rows;
    for (int i = 0; i < X.size(); ++i) {
        Complex ip = z.dot(X.point(i));  // z^* x_i
        if (std::abs(ip - alpha) < X.tol()) {
            Vector w = U * X.point(i);
            rows.push_back(scale * w.tail(X.dim() - 1));
        }
    }
    if (rows.empty()) throw std::invalid_argument("derived_code: alpha is not an angle at this point");
    Matrix out(static_cast<Eigen::Index>(rows.size()), X.dim() - 1);
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i];
    return PointSet(X.dim() - 1, std::move(out), X.tol());
}

void write_pointset(std::ostream& os, const PointSet& X) {
    os << "dimension " << X.dim() << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", X.tol());
    os << "tolerance " << buf << "\n";
    os << "points " << X.size() << "\n";
    for (int i = 0; i < X.size(); ++i) {
        for (int j = 0; j < X.dim(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", X.points()(i, j).real());
            os << (j ? "  " : "") << buf;
            std::snprintf(buf, sizeof buf, "%.17g", X.points()(i, j).imag());
            os << " " << buf;
        }
        os << "\n";
    }
}

void write_pointset_file(const std::string& path, const PointSet& X) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_pointset(os, X);
}

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

bool next_content_line(std::istream& is, std::string& line, int& lineno) {
    while (std::getline(is, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

PointSet read_pointset(std::istream& is, const std::string& name) {
    std::string line, key;
    int lineno = 0;
    int dim = 0, npts = 0;
    double tol = 1e-8;

    if (!next_content_line(is, line, lineno)) parse_fail(name, lineno, "missing 'dimension'");
    {
        std::istringstream ls(line);
        if (!(ls >> key >> dim) || key != "dimension" || dim < 1)
            parse_fail(name, lineno, "expected 'dimension <d>'");
    }
    if (!next_content_line(is, line, lineno)) parse_fail(name, lineno, "missing 'tolerance'");
    {
        std::istringstream ls(line);
        if (!(ls >> key >> tol) || key != "tolerance" || !(tol > 0))
            parse_fail(name, lineno, "expected 'tolerance <t>'");
    }
    if (!next_content_line(is, line, lineno)) parse_fail(name, lineno, "missing 'points'");
    {
        std::istringstream ls(line);
        if (!(ls >> key >> npts) || key != "points" || npts < 1)
            parse_fail(name, lineno, "expected 'points <n>'");
    }
    Matrix pts(npts, dim);
    for (int i = 0; i < npts; ++i) {
        if (!next_content_line(is, line, lineno))
            parse_fail(name, lineno, "expected " + std::to_string(npts) + " rows, got " + std::to_string(i));
        std::istringstream ls(line);
        for (int j = 0; j < dim; ++j) {
            double re, im;
            if (!(ls >> re >> im))
                parse_fail(name, lineno, "row " + std::to_string(i) + ": expected " + std::to_string(dim) +
                                             " 're im' pairs");
            pts(i, j) = Complex(re, im);
        }
        double extra;
        if (ls >> extra) parse_fail(name, lineno, "row " + std::to_string(i) + ": trailing values");
    }
    try {
        return PointSet(dim, std::move(pts), tol);
    } catch (const std::invalid_argument& e) {
        parse_fail(name, lineno, e.what());
    }
}

PointSet read_pointset_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_pointset(is, path);
}

}  // namespace cdl
