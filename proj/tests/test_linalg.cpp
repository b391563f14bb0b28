#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lueq/linalg.hpp"

using namespace lueq;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return m;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
    const ComplexMatrix m = random_matrix(rng, dim, dim);
    return (m + m.adjoint()) / 2.0;
}

const ComplexMatrix kPauliX = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
const ComplexMatrix kPauliZ = (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished();

ComplexMatrix bell_density() {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    return rho;
}

}  // namespace

TEST_CASE("kron matches the row-major index convention") {
    std::mt19937_64 rng(11);
    const ComplexMatrix a = random_matrix(rng, 2, 3);
    const ComplexMatrix b = random_matrix(rng, 3, 2);
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 2; ++q)
                    REQUIRE(std::abs(k(i * 3 + p, j * 2 + q) - a(i, j) * b(p, q)) < 1e-14);

    const ComplexMatrix xz = kron(kPauliX, kPauliZ);
    REQUIRE(std::abs(xz(0, 2) - 1.0) < 1e-15);
    REQUIRE(std::abs(xz(1, 3) + 1.0) < 1e-15);
}

TEST_CASE("kron_all multiplies left to right") {
    std::mt19937_64 rng(12);
    const ComplexMatrix a = random_matrix(rng, 2, 2);
    const ComplexMatrix b = random_matrix(rng, 2, 2);
    const ComplexMatrix c = random_matrix(rng, 2, 2);
    REQUIRE((kron_all({a, b, c}) - kron(kron(a, b), c)).norm() < 1e-12);
}

TEST_CASE("realign maps kron products to rank-1 outer products") {
    std::mt19937_64 rng(13);
    const ComplexMatrix a = random_matrix(rng, 3, 3);
    const ComplexMatrix b = random_matrix(rng, 2, 2);
    const ComplexMatrix r = realign(kron(a, b), BipartiteDims{3, 2});
    const ComplexMatrix expected = vec_row_major(a) * vec_row_major(b).transpose();
    REQUIRE((r - expected).norm() < 1e-12);
    REQUIRE(numerical_rank(r) == 1);
}

TEST_CASE("vec and unvec round trip") {
    std::mt19937_64 rng(14);
    const ComplexMatrix m = random_matrix(rng, 3, 4);
    REQUIRE((unvec_row_major(vec_row_major(m), 3, 4) - m).norm() == 0.0);
    REQUIRE(vec_row_major(m)(1) == m(0, 1));  // row-major order
}

TEST_CASE("partial trace of a product state returns the factors") {
    std::mt19937_64 rng(15);
    ComplexMatrix a = random_hermitian(rng, 2);
    ComplexMatrix b = random_hermitian(rng, 3);
    a = a * a.adjoint();
    b = b * b.adjoint();
    a /= a.trace();
    b /= b.trace();
    const ComplexMatrix rho = kron(a, b);
    const BipartiteDims dims{2, 3};
    REQUIRE((partial_trace(rho, dims, Subsystem::B) - a).norm() < 1e-12);
    REQUIRE((partial_trace(rho, dims, Subsystem::A) - b).norm() < 1e-12);
    REQUIRE(std::abs(partial_trace(rho, dims, Subsystem::B).trace() - 1.0) < 1e-12);
}

TEST_CASE("partial transpose is an involution and detects Bell entanglement") {
    std::mt19937_64 rng(16);
    const ComplexMatrix m = random_hermitian(rng, 6);
    const BipartiteDims dims{2, 3};
    REQUIRE((partial_transpose(partial_transpose(m, dims, Subsystem::B), dims, Subsystem::B) -
             m).norm() == 0.0);
    // transposing both subsystems is the full transpose
    REQUIRE((partial_transpose(partial_transpose(m, dims, Subsystem::A), dims, Subsystem::B) -
             m.transpose()).norm() < 1e-14);

    const ComplexMatrix pt = partial_transpose(bell_density(), BipartiteDims{2, 2}, Subsystem::B);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(pt, Eigen::EigenvaluesOnly);
    REQUIRE(es.eigenvalues().minCoeff() == Catch::Approx(-0.5).margin(1e-12));
}

TEST_CASE("hermitian eigendecomposition is sorted, gauged, and reconstructs") {
    std::mt19937_64 rng(17);
    const ComplexMatrix m = random_hermitian(rng, 5);
    const HermitianEigs eig = hermitian_eigs_descending(m);
    for (int i = 0; i + 1 < 5; ++i) REQUIRE(eig.values(i) >= eig.values(i + 1));
    const ComplexMatrix rebuilt =
        eig.vectors * eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
        eig.vectors.adjoint();
    REQUIRE((rebuilt - m).norm() < 1e-10);
    for (int c = 0; c < 5; ++c) {
        int lead = 0;
        while (std::abs(eig.vectors(lead, c)) < 1e-10) ++lead;
        REQUIRE(eig.vectors(lead, c).imag() == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(eig.vectors(lead, c).real() > 0.0);
    }
}

TEST_CASE("numerical rank uses a relative cutoff") {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    m(0, 0) = 5.0;
    m(1, 1) = 1e-3;
    m(2, 2) = 1e-14;
    REQUIRE(numerical_rank(m) == 2);
    REQUIRE(numerical_rank(m, 1e-4) == 2);
    REQUIRE(numerical_rank(m, 1e-1) == 1);
}

TEST_CASE("entropies") {
    RealVector uniform = RealVector::Constant(4, 0.25);
    REQUIRE(shannon_entropy(uniform) == Catch::Approx(2.0).margin(1e-14));
    RealVector deterministic = RealVector::Zero(4);
    deterministic(2) = 1.0;
    REQUIRE(shannon_entropy(deterministic) == 0.0);
    RealVector biased(2);
    biased << 0.7, 0.3;
    REQUIRE(shannon_entropy(biased) == Catch::Approx(0.8812908992306927).margin(1e-14));
    REQUIRE(shannon_entropy(biased, std::exp(1.0)) ==
            Catch::Approx(0.8812908992306927 * std::log(2.0)).margin(1e-14));

    REQUIRE(von_neumann_entropy(bell_density()) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(von_neumann_entropy(ComplexMatrix::Identity(4, 4) / 4.0) ==
            Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("relative entropy") {
    std::mt19937_64 rng(18);
    ComplexMatrix a = random_hermitian(rng, 3);
    a = a * a.adjoint() + 1e-3 * ComplexMatrix::Identity(3, 3);
    a /= a.trace();
    REQUIRE(relative_entropy(a, a) == Catch::Approx(0.0).margin(1e-11));

    // S(rho || I/d) = log d - S(rho)
    REQUIRE(relative_entropy(a, ComplexMatrix::Identity(3, 3) / 3.0) ==
            Catch::Approx(std::log2(3.0) - von_neumann_entropy(a)).margin(1e-10));

    // support violation: pure sigma cannot dominate a full-rank rho
    ComplexMatrix pure = ComplexMatrix::Zero(3, 3);
    pure(0, 0) = 1.0;
    REQUIRE(std::isinf(relative_entropy(a, pure)));
    REQUIRE(relative_entropy(pure, a) < std::numeric_limits<double>::infinity());
}

TEST_CASE("unitarity deviation") {
    REQUIRE(unitarity_deviation(kPauliX) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(unitarity_deviation(2.0 * kPauliX) > 1.0);
}
