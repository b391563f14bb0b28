#pragma once

#include <vector>

#include "lueq/states.hpp"

namespace lueq {

// Gap below which two eigenvalues (or Schmidt coefficients) count as tied.
inline constexpr double kDegeneracyGap = 1e-8;

// Schmidt decomposition psi = sum_j mu_j a_j (x) b_j with orthonormal columns
// and mu_1 >= mu_2 >= ... > 0 (zeros below kSchmidtCutoff dropped).
struct SchmidtData {
    RealVector coefficients;
    ComplexMatrix left_basis;   // M x rank
    ComplexMatrix right_basis;  // N x rank
    int rank = 0;
};

inline constexpr double kSchmidtCutoff = 1e-10;

SchmidtData schmidt_decompose(const PureState& psi);

// Reconstructs the coefficient matrix sum_j mu_j a_j b_j^T from Schmidt data.
ComplexMatrix schmidt_reconstruct(const SchmidtData& s);

// I_alpha = tr (A A^dagger)^alpha for alpha = 1..max_alpha.
// max_alpha <= 0 means min(M, N).
std::vector<double> invariants_I(const PureState& psi, int max_alpha = 0);

// True iff the sorted Schmidt spectra agree entrywise within tol. The I_alpha
// values are cross-checked as a second route; a disagreement between the two
// criteria throws (it would be a bug, not a verdict).
bool pure_lu_equivalent(const PureState& psi, const PureState& phi, double tol = 1e-10);

// One record per nonzero eigenvalue of a mixed state: the eigenvalue, the
// Schmidt data of its eigenvector, and the expansion coefficients X, Y of the
// Schmidt vectors in the reference bases.
struct RepresentationRecord {
    double eigenvalue = 0.0;
    SchmidtData schmidt;
    ComplexMatrix x;  // M x rank
    ComplexMatrix y;  // N x rank
};

struct Representation {
    std::vector<RepresentationRecord> records;
    ComplexMatrix basis_a;  // M x M, extends the first record's left Schmidt basis
    ComplexMatrix basis_b;  // N x N
    bool degenerate = false;
};

// Spectral decomposition with per-eigenvector Schmidt data. Eigenvalues are
// sorted descending; those below kSupportCutoff are dropped. `degenerate` is
// set when the full spectrum (including the dropped zeros) has a gap below
// kDegeneracyGap or any eigenvector has tied Schmidt coefficients.
Representation representation_of(const DensityMatrix& rho);

// Rebuilds sum_i lambda_i |e_i><e_i| from the representation records.
ComplexMatrix representation_reconstruct(const Representation& rep, BipartiteDims dims);

}  // namespace lueq
