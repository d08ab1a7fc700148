#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cdl/zonal.hpp"

namespace cdl {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Finite list of unit vectors in Omega(d) = unit sphere of C^d.
// Points are the rows of a dense matrix; order is preserved everywhere.
class PointSet {
public:
    PointSet(int dim, Matrix points, double tol = 1e-8);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(points_.rows()); }
    double tol() const { return tol_; }
    const Matrix& points() const { return points_; }
    Vector point(int i) const { return points_.row(i); }

    // G[i][j] = x_i^* x_j
    Matrix gram() const { return points_.conjugate() * points_.transpose(); }

private:
    int dim_;
    Matrix points_;
    double tol_;
};

// Inner product set A(X) = {x^* y : x != y}, clustered at tolerance.
// alpha_0 = 1 is not stored. Ordering: decreasing modulus, then argument.
struct AngleSet {
    std::vector<Complex> alphas;
    std::vector<long> counts;  // ordered pairs realizing each angle

    int degree() const { return static_cast<int>(alphas.size()); }
    // A*(X): angles of modulus < 1
    std::vector<Complex> interior(double tol = 1e-8) const;
    std::optional<int> find(Complex value, double tol = 1e-8) const;
};

AngleSet angle_set(const PointSet& X);

// X = L u wL u ... u w^{n-1} L for w = exp(2 pi i / n)
PointSet antipodal_cover(const PointSet& L, int n);

// fiber representatives if X is n-antipodal, empty otherwise
std::optional<std::vector<int>> detect_antipodal(const PointSet& X, int n);

// phi(x) = (Re x_1, Im x_1, ..., Re x_d, Im x_d) as rows
Eigen::MatrixXd embed_real(const PointSet& X);

// Derived code X_alpha(z): the alpha-neighbours of point z projected onto
// z-perp and rescaled into Omega(d-1). Realized by a Householder-type unitary
// sending z to e_1, then dropping the first coordinate.
PointSet derived_code(const PointSet& X, int z_index, Complex alpha);

// ---- point-set text format ----
//   dimension <d>
//   tolerance <t>
//   points <n>
//   <re> <im>  ... d pairs per row, 17 significant digits
void write_pointset(std::ostream& os, const PointSet& X);
void write_pointset_file(const std::string& path, const PointSet& X);
PointSet read_pointset(std::istream& is, const std::string& name = "<stream>");
PointSet read_pointset_file(const std::string& path);

}  // namespace cdl
