#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdl/bounds.hpp"
#include "cdl/pointset.hpp"

namespace cdl {

// Partition of X x X into inner-product relations. Relation 0 is the
// diagonal; relations 1..s follow the AngleSet ordering. tilde[i] is the
// transpose pairing: alpha_{tilde[i]} = conj(alpha_i).
struct RelationPartition {
    int n = 0;
    int s = 0;                                   // number of nonidentity classes
    std::vector<Complex> alphas;                 // alphas[0] = 1
    Eigen::Matrix<int16_t, Eigen::Dynamic, Eigen::Dynamic> rel;
    std::vector<int> tilde;

    std::vector<long> valencies_at(int x) const;
};

RelationPartition relations(const PointSet& X);

// relation partition from an explicit index matrix (diagonal must be class 0)
RelationPartition relation_partition_from_matrix(
    Eigen::Matrix<int16_t, Eigen::Dynamic, Eigen::Dynamic> rel, std::vector<Complex> alphas);

struct SchemeWitness {
    int i = 0, j = 0;   // offending product A_i A_j
    int x = 0, y = 0;   // pair where constancy fails
};

struct SchemeReport {
    bool is_scheme = false;
    bool symmetric = false;
    int n = 0, s = 0;
    std::vector<Complex> alphas;
    std::vector<int> tilde;
    std::optional<SchemeWitness> witness;
    // closure[i][j]: A_i A_j lies in the span of the adjacency matrices
    std::vector<std::vector<bool>> closure;
    // intersection numbers p[i][j][k], exact integers; valid when is_scheme
    std::vector<std::vector<std::vector<long>>> p;
    std::vector<long> valencies;

    // spectral data, computed when is_scheme
    std::vector<Matrix> idempotents;
    std::vector<int> idem_transpose;   // E_hat: E_{hat[j]} = E_j^T
    std::vector<long> multiplicities;
    Matrix P, Q;
};

// full verification by integer products with per-class constancy
SchemeReport check_scheme(const RelationPartition& rel, bool with_spectral = true);

// F_{k,l} = (1/|X|) sum_i g_{k,l}(alpha_i) A_i for (k,l) in U; when |U| = s the
// complement I - sum F is appended. Requires X to be a U*U-design.
std::vector<Matrix> idempotents_from_design(const PointSet& X, const LowerSet& U,
                                            double tol = kDesignTol);

// Krein parameters q_{i,j}^k of a verified scheme
std::vector<std::vector<std::vector<Complex>>> krein(const SchemeReport& rep);

// Bannai-Muzychuk fusion: constant row sums of Q over each block.
struct FusionResult {
    bool valid = false;
    Matrix fused_Q;
};
FusionResult fusion_check(const SchemeReport& rep, const std::vector<std::vector<int>>& adj_partition,
                          const std::vector<std::vector<int>>& idem_partition, double tol = 1e-8);

// quotient on the fibers of an n-antipodal set, classes merged by equal |alpha|
SchemeReport quotient_scheme(const PointSet& X, const RelationPartition& rel, int n);

// G = (g_{k,l}(alpha)) with columns in graded order (higher k first within a
// total degree). det_monomial is det of (alpha^k conj(alpha)^l), related by the
// product of leading coefficients when U is a lower set.
struct JacobiMatrix {
    Matrix G;
    Complex det;
    Complex det_monomial;
};
JacobiMatrix jacobi_matrix(int d, const std::vector<Complex>& angles, const LowerSet& U);
// arbitrary column index list, used in the given order
JacobiMatrix jacobi_matrix(int d, const std::vector<Complex>& angles,
                           const std::vector<BiDegree>& cols);

// k_i(x) constant over x for every relation
struct InvarianceReport {
    bool invariant = false;
    std::vector<long> valencies;  // valid when invariant
};
InvarianceReport invariance_check(const PointSet& X);

// Thm-7.5(ii)-style criterion: X a U*U-design, p_{i,j}(x,y) constant and
// symmetric whenever i or j is outside I, and the Jacobi matrix over rows I
// nonsingular. Cross-validate against check_scheme separately.
struct PartialRegularityReport {
    bool design_ok = false;
    bool outside_constant = false;
    bool jacobi_nonsingular = false;
    bool predicts_scheme() const { return design_ok && outside_constant && jacobi_nonsingular; }
};
PartialRegularityReport partial_regularity_scheme_check(const PointSet& X, const LowerSet& U,
                                                        const std::vector<int>& I,
                                                        double tol = kDesignTol);

// rows of U with (m_j/|X|) E_j = U U^*, as unit vectors
PointSet embed_scheme(const SchemeReport& rep, int idem_index, double tol = 1e-8);

// Krein-parameter design test for the embedding given by idem_index
struct KreinDesignEntry {
    BiDegree deg;
    Complex moment_sum;
    Rational target;
    bool holds = false;
};
std::vector<KreinDesignEntry> krein_design_check(const SchemeReport& rep, int idem_index,
                                                 const LowerSet& T, double tol = 1e-6);

// ---- skew-symmetric conference matrices ----

// axioms: zero diagonal, +-1 off-diagonal, C^T = -C, C C^T = (n-1) I
bool is_skew_conference(const Eigen::MatrixXi& C);

// exhaustive search over the strict upper triangle; practical for small n
std::optional<Eigen::MatrixXi> find_skew_conference(int n);

// L from the Gram matrix I + i C / sqrt(n-1); X = L u -L is the design
PointSet conference_to_design(const Eigen::MatrixXi& C);

// recovers C from the fiber Gram matrix; inverse of conference_to_design
Eigen::MatrixXi design_to_conference(const PointSet& L);

}  // namespace cdl
