#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lueq/invariants.hpp"

using namespace lueq;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

PureState random_pure(std::mt19937_64& rng, int m, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return PureState::from_coefficients(a / a.norm());
}

PureState bell_state() {
    ComplexMatrix a(2, 2);
    a << kInvSqrt2, 0.0, 0.0, kInvSqrt2;
    return PureState::from_coefficients(a);
}

}  // namespace

TEST_CASE("schmidt decomposition of the Bell state") {
    const SchmidtData s = schmidt_decompose(bell_state());
    REQUIRE(s.rank == 2);
    REQUIRE(s.coefficients(0) == Catch::Approx(kInvSqrt2).margin(1e-12));
    REQUIRE(s.coefficients(1) == Catch::Approx(kInvSqrt2).margin(1e-12));
    REQUIRE((s.left_basis.adjoint() * s.left_basis - ComplexMatrix::Identity(2, 2)).norm() <
            1e-12);
}

TEST_CASE("schmidt decomposition reconstructs and orders descending") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const PureState psi = random_pure(rng, 3, 4);
        const SchmidtData s = schmidt_decompose(psi);
        REQUIRE(s.rank <= 3);
        for (int i = 0; i + 1 < s.rank; ++i) {
            REQUIRE(s.coefficients(i) >= s.coefficients(i + 1));
        }
        REQUIRE((schmidt_reconstruct(s) - psi.coefficients()).norm() < 1e-10);
        REQUIRE(s.coefficients.squaredNorm() == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("schmidt rank of a product state is one") {
    ComplexMatrix a = ComplexMatrix::Zero(2, 3);
    a(1, 2) = 1.0;
    REQUIRE(schmidt_decompose(PureState::from_coefficients(a)).rank == 1);
}

TEST_CASE("I_alpha invariants: normalization and Bell powers") {
    std::mt19937_64 rng(22);
    const std::vector<double> ia = invariants_I(random_pure(rng, 3, 3));
    REQUIRE(ia.size() == 3);
    REQUIRE(ia[0] == Catch::Approx(1.0).margin(1e-12));  // I_1 = tr rho_A = 1

    const std::vector<double> bell = invariants_I(bell_state(), 5);
    REQUIRE(bell.size() == 5);
    for (std::size_t a = 0; a < bell.size(); ++a) {
        REQUIRE(bell[a] == Catch::Approx(std::pow(2.0, -double(a))).margin(1e-12));
    }
}

TEST_CASE("pure equivalence: planted orbits accepted, distinct spectra rejected") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const PureState psi = random_pure(rng, 3, 3);
        const ComplexMatrix u1 = haar_unitary(3, rng);
        const ComplexMatrix u2 = haar_unitary(3, rng);
        const PureState phi =
            PureState::from_coefficients(u1 * psi.coefficients() * u2.transpose());
        REQUIRE(pure_lu_equivalent(psi, phi));
    }
    const PureState bell = bell_state();
    ComplexMatrix tilted(2, 2);
    tilted << 0.9, 0.0, 0.0, std::sqrt(1.0 - 0.81);
    REQUIRE_FALSE(pure_lu_equivalent(bell, PureState::from_coefficients(tilted)));
}

TEST_CASE("representation of a dephased SC state") {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = 0.7;
    rho(3, 3) = 0.3;
    const DensityMatrix chi = DensityMatrix::validate(rho, BipartiteDims{2, 2});
    const Representation rep = representation_of(chi);
    REQUIRE(rep.records.size() == 2);
    REQUIRE(rep.degenerate);  // the two-dimensional kernel counts as a tie
    REQUIRE(rep.records[0].eigenvalue == Catch::Approx(0.7).margin(1e-12));
    REQUIRE(rep.records[1].eigenvalue == Catch::Approx(0.3).margin(1e-12));
    REQUIRE(rep.records[0].schmidt.rank == 1);
    REQUIRE(rep.records[1].schmidt.rank == 1);
    REQUIRE((representation_reconstruct(rep, chi.dims()) - chi.matrix()).norm() < 1e-10);
}

TEST_CASE("representation of a pure state uses its own Schmidt bases") {
    const Representation rep = representation_of(bell_state().to_density());
    REQUIRE(rep.records.size() == 1);
    REQUIRE(rep.records[0].schmidt.rank == 2);
    REQUIRE((rep.records[0].x - ComplexMatrix::Identity(2, 2)).norm() < 1e-10);
    REQUIRE((rep.records[0].y - ComplexMatrix::Identity(2, 2)).norm() < 1e-10);
}

TEST_CASE("representation flags degeneracy instead of picking a basis") {
    const Representation rep = representation_of(
        DensityMatrix::validate(ComplexMatrix::Identity(4, 4) / 4.0, BipartiteDims{2, 2}));
    REQUIRE(rep.degenerate);
}

TEST_CASE("representation reconstructs generic rank-4 states") {
    std::mt19937_64 rng(24);
    std::exponential_distribution<double> expo(1.0);
    RealVector w(4);
    for (int i = 0; i < 4; ++i) w(i) = expo(rng);
    w /= w.sum();
    const ComplexMatrix u = haar_unitary(4, rng);
    const ComplexMatrix m = u * w.asDiagonal() * u.adjoint();
    const DensityMatrix rho =
        DensityMatrix::validate((m + m.adjoint()) / 2.0, BipartiteDims{2, 2});
    const Representation rep = representation_of(rho);
    REQUIRE((representation_reconstruct(rep, rho.dims()) - rho.matrix()).norm() < 1e-9);
}
