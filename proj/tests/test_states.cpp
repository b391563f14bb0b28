#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lueq/states.hpp"

using namespace lueq;

TEST_CASE("density validation names the violated invariant") {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;

    SECTION("valid input passes") {
        REQUIRE_NOTHROW(DensityMatrix::validate(m, BipartiteDims{2, 2}));
    }
    SECTION("non-hermitian") {
        m(0, 1) = Complex(0.0, 0.2);
        try {
            DensityMatrix::validate(m, BipartiteDims{2, 2});
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            REQUIRE(e.invariant() == "NotHermitian");
            REQUIRE(e.magnitude() > 0.1);
        }
    }
    SECTION("negative eigenvalue") {
        m(0, 0) = -0.25;
        m(1, 1) = 0.75;
        try {
            DensityMatrix::validate(m, BipartiteDims{2, 2});
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            REQUIRE(e.invariant() == "NotPSD");
        }
    }
    SECTION("trace off") {
        m(0, 0) = 0.5;
        try {
            DensityMatrix::validate(m, BipartiteDims{2, 2});
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            REQUIRE(e.invariant() == "TraceNotOne");
        }
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(DensityMatrix::validate(m, BipartiteDims{2, 3}), DimensionError);
    }
}

TEST_CASE("pure state requires unit norm") {
    ComplexMatrix a(2, 2);
    a << 1.0, 0.0, 0.0, 1.0;
    REQUIRE_THROWS_AS(PureState::from_coefficients(a), ValidationError);
    REQUIRE_NOTHROW(PureState::from_coefficients(a / a.norm()));
}

TEST_CASE("two-qubit SC coefficients and their embedding") {
    const SCCoefficients sc = SCCoefficients::two_qubit(0.7, Complex(0.1, 0.05), 0.3);
    REQUIRE(sc.c1() == 0.7);
    REQUIRE(sc.c4() == 0.3);
    REQUIRE(sc.c2() == Complex(0.1, 0.05));
    REQUIRE(sc.two_qubit_form());

    const DensityMatrix rho = sc_embed(sc);
    REQUIRE(rho.dim() == 4);
    // c2 multiplies |00><11|: row index 0, column index 3
    REQUIRE(rho.matrix()(0, 3) == Complex(0.1, 0.05));
    REQUIRE(rho.matrix()(3, 0) == Complex(0.1, -0.05));
    REQUIRE(rho.matrix()(0, 0) == Complex(0.7, 0.0));
    REQUIRE(rho.matrix()(1, 1) == Complex(0.0, 0.0));
    REQUIRE(rho.matrix()(1, 2) == Complex(0.0, 0.0));
}

TEST_CASE("SC validation rejects PSD violations") {
    // |c2| > sqrt(c1 c4)
    REQUIRE_THROWS_AS(SCCoefficients::two_qubit(0.5, 0.6, 0.5), ValidationError);
    REQUIRE_THROWS_AS(SCCoefficients::two_qubit(0.5, 0.0, 0.3), ValidationError);
    REQUIRE_NOTHROW(SCCoefficients::two_qubit(0.5, 0.5, 0.5));
}

TEST_CASE("multi-party SC embedding places entries on the diagonal lattice") {
    ComplexMatrix c(2, 2);
    c << 0.6, 0.2, 0.2, 0.4;
    const SCCoefficients sc = SCCoefficients::validate(c, 3);
    const DensityMatrix rho = sc_embed(sc);
    REQUIRE(rho.dim() == 8);
    REQUIRE(rho.matrix()(0, 7) == Complex(0.2, 0.0));  // |000><111|
    REQUIRE(rho.matrix()(7, 7) == Complex(0.4, 0.0));
    REQUIRE(rho.matrix()(1, 1) == Complex(0.0, 0.0));
    REQUIRE(rho.local_dims().size() == 3);
}

TEST_CASE("haar unitaries are unitary and seed-deterministic") {
    const ComplexMatrix u = haar_unitary(4, 99);
    REQUIRE(unitarity_deviation(u) < 1e-12);
    REQUIRE((haar_unitary(4, 99) - u).norm() == 0.0);
    REQUIRE((haar_unitary(4, 100) - u).norm() > 1e-3);
}

TEST_CASE("random SC states are valid and deterministic") {
    const SCCoefficients a = random_sc(7);
    const SCCoefficients b = random_sc(7);
    REQUIRE((a.coefficients() - b.coefficients()).norm() == 0.0);
    REQUIRE(std::abs(a.c1() + a.c4() - 1.0) < 1e-12);
    REQUIRE(std::abs(a.c2()) <= std::sqrt(a.c1() * a.c4()) + 1e-12);

    std::mt19937_64 rng(8);
    const SCCoefficients multi = random_sc(rng, 3, 3);
    REQUIRE(multi.levels() == 3);
    REQUIRE(multi.parties() == 3);
    REQUIRE(std::abs(multi.coefficients().trace().real() - 1.0) < 1e-12);
}

TEST_CASE("local unitary pairs expose SU(2) factors") {
    std::mt19937_64 rng(9);
    const LocalUnitary2 u = LocalUnitary2::random(rng);
    REQUIRE(unitarity_deviation(u.factor_a()) < 1e-12);
    REQUIRE(unitarity_deviation(u.factor_b()) < 1e-12);
    REQUIRE(std::abs(u.factor_a()(0, 0) - u.a1) < 1e-15);
    REQUIRE(std::abs(u.factor_a()(0, 1) + u.a2) < 1e-15);
    REQUIRE_THROWS_AS(LocalUnitary2::make(Complex(1.0, 0.0), Complex(0.5, 0.0),
                                          Complex(1.0, 0.0), Complex(0.0, 0.0)),
                      ValidationError);
}

TEST_CASE("conjugation by local unitaries matches the kron route") {
    std::mt19937_64 rng(10);
    const SCCoefficients sc = random_sc(rng);
    const DensityMatrix rho = sc_embed(sc);

    const LocalUnitary2 u = LocalUnitary2::random(rng);
    const ComplexMatrix w = kron(ComplexMatrix(u.factor_a()), ComplexMatrix(u.factor_b()));
    const DensityMatrix via_pair = conjugate_by_locals(rho, u);
    REQUIRE((via_pair.matrix() - w * rho.matrix() * w.adjoint()).norm() < 1e-12);

    const ComplexMatrix u1 = haar_unitary(2, rng);
    const ComplexMatrix u2 = haar_unitary(2, rng);
    const DensityMatrix via_list = conjugate_by_locals(rho, {u1, u2});
    const ComplexMatrix w2 = kron(u1, u2);
    REQUIRE((via_list.matrix() - w2 * rho.matrix() * w2.adjoint()).norm() < 1e-12);

    // conjugation preserves the spectrum, hence the entropy
    REQUIRE(von_neumann_entropy(via_pair.matrix()) ==
            Catch::Approx(von_neumann_entropy(rho.matrix())).margin(1e-10));
}
