#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lueq/states.hpp"

namespace lueq {

enum class EquivalenceStatus { Equivalent, NotEquivalent, Inconclusive };

// Decision record. Equivalent always carries a witness pair whose conjugation
// residual has been re-verified; NotEquivalent always carries a certificate
// naming the violated LU invariant. A failed numerical search is reported as
// Inconclusive with the best residual found, never as NotEquivalent.
struct EquivalenceVerdict {
    EquivalenceStatus status = EquivalenceStatus::Inconclusive;
    std::optional<std::pair<ComplexMatrix, ComplexMatrix>> witness;
    double residual = 0.0;
    std::optional<std::string> certificate;
};

const char* to_string(EquivalenceStatus s);

// Phases of the diagonal unitary D = diag(e^{i theta_1}, ..., e^{i theta_MN}).
struct PhaseVector {
    std::vector<double> thetas;
};

// Result of splitting a unitary v = u1 (x) u2. Both factors are unitary; the
// normalization constant k (u1 u1^dagger = k^{-1} I before rescaling) is
// reported. Phase gauge: the first significant entry of u1 is real positive.
struct TensorFactors {
    ComplexMatrix u1;
    ComplexMatrix u2;
    double k = 1.0;
};

// Splits a unitary into local factors via the rank of its realignment.
// Throws NotUnitaryError for non-unitary input and NotDecomposableError when
// the second singular value of the realignment exceeds tol * the first.
// Guarantees ||u1 (x) u2 - v||_F < 10 * tol on success.
TensorFactors extract_tensor_factors(const ComplexMatrix& v, BipartiteDims dims,
                                     double tol = 1e-7);

struct LuTestOptions {
    double tol = 1e-7;             // decomposability and verification residual
    double spectral_tol = 1e-7;    // eigenvalue-list comparison
    double degeneracy_gap = 1e-8;  // smaller gaps gate to Inconclusive
    int grid_seeds = 32;           // random phase-search starting points
    int polish_rounds = 3;         // extra shrinking restarts per start
    std::uint64_t seed = 20260825;
};

// Phase-search LU test for non-degenerate states: diagonalize both states,
// then search diag-phase matrices D for a tensor-decomposable X D Y^dagger.
// Spectrum mismatch is a NotEquivalent certificate; spectral degeneracy and
// search failure both yield Inconclusive (the search is a semi-decision).
EquivalenceVerdict nondegenerate_lu_test(const DensityMatrix& rho, const DensityMatrix& rho2,
                                         const LuTestOptions& opts = {});

struct BruteForceResult {
    double residual = 0.0;
    ComplexMatrix u1;
    ComplexMatrix u2;
};

// Direct minimization of ||(U1 (x) U2) rho (U1 (x) U2)^dagger - rho2||_F over
// the local unitary group, parametrized by traceless Hermitian generators
// around Haar-random base points (restart 0 starts at the identity).
// Deterministic for fixed (restarts, seed); the result is the minimum over
// the restart list.
BruteForceResult brute_force_lu_search(const DensityMatrix& rho, const DensityMatrix& rho2,
                                       int restarts = 8, std::uint64_t seed = 20260825);

// Sup-norm distance of the sorted eigenvalue lists; an LU invariant.
double spectral_distance(const DensityMatrix& rho, const DensityMatrix& rho2);

// Searches the standard LU invariants (spectra, purity vector tr rho^k,
// reduced-state spectra) for one that separates the two states by more than
// tol. Returns a certificate string, or nullopt if none separates them.
std::optional<std::string> separating_invariant(const DensityMatrix& rho,
                                                const DensityMatrix& rho2, double tol = 1e-7);

}  // namespace lueq
