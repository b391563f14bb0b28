#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lueq/linalg.hpp"

namespace lueq {

// Validation tolerances for state types. Chosen above the eigendecomposition
// residual (~1e-11 for dim <= 16) so valid states are never rejected.
inline constexpr double kDensityTol = 1e-9;
inline constexpr double kUnitNormTol = 1e-10;

// Hermitian, positive semidefinite, unit-trace matrix together with its
// subsystem dimensions. For bipartite states local_dims has two entries; SC
// embeddings of m-partite states carry m entries.
class DensityMatrix {
  public:
    // Validates and wraps; throws ValidationError naming the failed invariant
    // (NotHermitian, NotPSD, TraceNotOne) and its magnitude.
    static DensityMatrix validate(ComplexMatrix m, BipartiteDims dims, double tol = kDensityTol);
    static DensityMatrix validate(ComplexMatrix m, std::vector<int> local_dims,
                                  double tol = kDensityTol);

    const ComplexMatrix& matrix() const { return mat_; }
    const std::vector<int>& local_dims() const { return local_dims_; }
    int dim() const { return static_cast<int>(mat_.rows()); }
    bool bipartite() const { return local_dims_.size() == 2; }
    BipartiteDims dims() const;  // throws unless bipartite

  private:
    DensityMatrix(ComplexMatrix m, std::vector<int> local_dims)
        : mat_(std::move(m)), local_dims_(std::move(local_dims)) {}

    ComplexMatrix mat_;
    std::vector<int> local_dims_;
};

// Bipartite pure state stored as its coefficient matrix A, psi = sum_ij
// A[i,j] |i>|j>, with unit Frobenius norm.
class PureState {
  public:
    static PureState from_coefficients(ComplexMatrix a, double tol = kUnitNormTol);

    const ComplexMatrix& coefficients() const { return coeffs_; }
    BipartiteDims dims() const {
        return {static_cast<int>(coeffs_.rows()), static_cast<int>(coeffs_.cols())};
    }
    ComplexVector ket() const { return vec_row_major(coeffs_); }
    DensityMatrix to_density() const;

  private:
    explicit PureState(ComplexMatrix a) : coeffs_(std::move(a)) {}
    ComplexMatrix coeffs_;
};

// Coefficient matrix c of a Schmidt-correlated state
// rho = sum_{m,n} c[m,n] |m...m><n...n| on `parties` subsystems.
// c is Hermitian PSD with unit trace.
class SCCoefficients {
  public:
    static SCCoefficients validate(ComplexMatrix c, int parties = 2, double tol = kDensityTol);
    // Two-qubit convenience constructor: c = [[c1, c2], [conj(c2), c4]],
    // so c2 multiplies |00><11|.
    static SCCoefficients two_qubit(double c1, Complex c2, double c4, double tol = kDensityTol);

    const ComplexMatrix& coefficients() const { return c_; }
    int levels() const { return static_cast<int>(c_.rows()); }
    int parties() const { return parties_; }

    bool two_qubit_form() const { return levels() == 2 && parties_ == 2; }
    double c1() const { return c_(0, 0).real(); }
    Complex c2() const { return c_(0, 1); }
    double c4() const { return c_(1, 1).real(); }

  private:
    SCCoefficients(ComplexMatrix c, int parties) : c_(std::move(c)), parties_(parties) {}
    ComplexMatrix c_;
    int parties_;
};

// Pair of 2x2 special unitaries in the form
//   U1 = [[a1, -a2], [conj(a2), conj(a1)]],  U2 likewise with b1, b2,
// with |a1|^2 + |a2|^2 = 1 and |b1|^2 + |b2|^2 = 1.
struct LocalUnitary2 {
    Complex a1, a2;
    Complex b1, b2;

    static LocalUnitary2 make(Complex a1, Complex a2, Complex b1, Complex b2,
                              double tol = kUnitNormTol);
    static LocalUnitary2 random(std::mt19937_64& rng);

    Eigen::Matrix2cd factor_a() const;
    Eigen::Matrix2cd factor_b() const;
};

// Embeds SC coefficients as a density matrix on `levels^parties` dimensions:
// entry c[m,n] lands at composite index (m...m, n...n), all else zero.
DensityMatrix sc_embed(const SCCoefficients& sc);

// Free-function form of DensityMatrix::validate.
DensityMatrix validate_density(ComplexMatrix m, BipartiteDims dims, double tol = kDensityTol);

// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
// R-diagonal phases absorbed into Q. Deterministic per seed.
ComplexMatrix haar_unitary(int dim, std::uint64_t seed);
ComplexMatrix haar_unitary(int dim, std::mt19937_64& rng);

// Haar-random pure qubit-like state vector of the given dimension.
ComplexVector random_pure_ket(int dim, std::mt19937_64& rng);

// Random SC coefficients: normalized Gram matrix of complex Gaussian vectors,
// PSD and unit trace by construction. Deterministic per seed.
SCCoefficients random_sc(std::uint64_t seed, int n_levels = 2, int parties = 2);
SCCoefficients random_sc(std::mt19937_64& rng, int n_levels = 2, int parties = 2);

// (U_1 (x) ... (x) U_n) rho (U_1 (x) ... (x) U_n)^dagger.
DensityMatrix conjugate_by_locals(const DensityMatrix& rho,
                                  const std::vector<ComplexMatrix>& unitaries);
DensityMatrix conjugate_by_locals(const DensityMatrix& rho, const LocalUnitary2& u);

}  // namespace lueq
