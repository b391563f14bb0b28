#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "lueq/errors.hpp"

namespace lueq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Eigenvalues / singular values below this fraction of the largest one are
// treated as zero (support detection, numerical rank).
inline constexpr double kSupportCutoff = 1e-10;

// Default logarithm base for all entropies: bits.
inline constexpr double kDefaultLogBase = 2.0;

// Subsystem dimensions of a bipartite operator on H_A (x) H_B.
struct BipartiteDims {
    int dim_a = 2;
    int dim_b = 2;

    int total() const { return dim_a * dim_b; }
    bool operator==(const BipartiteDims&) const = default;
};

enum class Subsystem { A, B };

// Kronecker product, row-major composite index:
// (a (x) b)[i*rows_b + k, j*cols_b + l] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product of a list of factors, left to right.
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

// Realignment of an MN x MN matrix into an M^2 x N^2 matrix: row (i,j) is the
// row-major vec of the (i,j) block of v. Satisfies
// realign(kron(A, B)) = vec(A) vec(B)^T with row-major vec.
ComplexMatrix realign(const ComplexMatrix& v, BipartiteDims dims);

// Row-major vec of a matrix.
ComplexVector vec_row_major(const ComplexMatrix& m);

// unvec: inverse of vec_row_major for the given shape.
ComplexMatrix unvec_row_major(const ComplexVector& v, int rows, int cols);

// Trace over subsystem `which`; the result acts on the other subsystem.
ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Subsystem which);

// Transpose on subsystem `which` only.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims, Subsystem which);

// Hermitian eigendecomposition sorted by descending eigenvalue. Each
// eigenvector's first significant entry is rotated to be real non-negative so
// that the output is deterministic. Exact eigenvalue ties are broken by
// lexicographic comparison of the eigenvector entries.
struct HermitianEigs {
    RealVector values;      // descending
    ComplexMatrix vectors;  // columns matched to values
};
HermitianEigs hermitian_eigs_descending(const ComplexMatrix& m);

// Number of singular values above rel_cutoff * largest.
int numerical_rank(const ComplexMatrix& m, double rel_cutoff = kSupportCutoff);

// -sum p log p over the entries of p, with 0 log 0 = 0.
double shannon_entropy(const RealVector& p, double log_base = kDefaultLogBase);

// von Neumann entropy -tr(rho log rho) of a Hermitian PSD unit-trace matrix.
// Validation is the caller's job (see DensityMatrix); eigenvalues <= 0 are
// skipped.
double von_neumann_entropy(const ComplexMatrix& rho, double log_base = kDefaultLogBase);

// Relative entropy S(rho || sigma) = tr rho log rho - tr rho log sigma,
// computed on eigenspaces. Returns +infinity when the support of rho is not
// contained in the support of sigma (eigenvalues below kSupportCutoff times
// the largest count as zero).
double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                        double log_base = kDefaultLogBase);

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).norm();
}

// ||v^dagger v - I||_F, zero for unitary v.
double unitarity_deviation(const ComplexMatrix& v);

}  // namespace lueq
