#pragma once

#include <vector>

#include "lueq/states.hpp"

namespace lueq {

// Comparison tolerance on canonical coefficients.
inline constexpr double kCanonicalTol = 1e-8;

// Canonical representative of a two-qubit SC class: diagonal ordered so
// lambda1 >= lambda4, off-diagonal real lambda2 >= 0. Unique within an LU
// class, so two SC states are LU equivalent exactly when their forms match.
struct StandardForm2Q {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda4 = 0.0;
    bool swapped = false;  // true when the diagonal had to be relabeled

    // (witness_a (x) witness_b) embed(input) (witness_a (x) witness_b)^dagger
    // equals the embedded canonical state.
    Eigen::Matrix2cd witness_a;
    Eigen::Matrix2cd witness_b;

    SCCoefficients coefficients() const;
};

StandardForm2Q standard_form_2q(const SCCoefficients& sc);

// Two-qubit SC LU-equivalence decision: the standard forms are compared
// entrywise.
bool sc_lu_equivalent(const SCCoefficients& a, const SCCoefficients& b,
                      double tol = kCanonicalTol);

// Closed-form orbit membership: true when b matches (c1, c2 e^{i delta}, c4)
// or (c4, c2 e^{i delta}, c1) of a for some real delta. Logically the same
// predicate as sc_lu_equivalent; kept as an independent cross-check.
bool sc_family_equivalent(const SCCoefficients& a, const SCCoefficients& b,
                          double tol = kCanonicalTol);

// Canonical form of a general SC state (any level count, any party count).
// A common relabeling of every party sorts the diagonal descending; local
// diagonal phases then make the first row real non-negative. Phases that no
// diagonal gauge can remove stay behind in residual_phases.
struct GeneralSCForm {
    SCCoefficients canonical;
    RealMatrix residual_phases;    // phi_mn for 1 <= m < n; zero elsewhere
    std::vector<int> permutation;  // slot k of the form holds input level permutation[k]
    RealVector gauge_phases;       // psi applied as diag(e^{i psi_k}) on party 0

    // Per-party unitaries mapping the embedded input onto the embedded form.
    std::vector<ComplexMatrix> witnesses;
};

GeneralSCForm standard_form_general(const SCCoefficients& sc);

// An SC state is separable exactly when every off-diagonal coefficient
// vanishes; equivalently, when its partial transpose stays positive.
bool sc_separable(const SCCoefficients& sc, double tol = kSupportCutoff);

// LU equivalence of the pure states a0|0...0> + a1|1...1> and
// b0|0...0> + b1|1...1>. Each pair must be sorted descending, non-negative,
// with squares summing to 1; throws ValidationError otherwise.
bool pure_sc_equivalent(double a0, double a1, double b0, double b1, double tol = 1e-10);

}  // namespace lueq
