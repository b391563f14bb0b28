#include "lueq/states.hpp"

#include <cmath>
#include <numeric>

namespace lueq {

namespace {

std::int64_t pow_int(int base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void check_density_invariants(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw DimensionError("density matrix must be square");
    }
    const double herm = (m - m.adjoint()).norm();
    if (herm > tol) {
        throw ValidationError("NotHermitian", herm,
                              "density matrix not Hermitian: ||m - m^dagger|| = " +
                                  std::to_string(herm));
    }
    const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
    if (trace_dev > tol) {
        throw ValidationError("TraceNotOne", trace_dev,
                              "density matrix trace deviates from 1 by " +
                                  std::to_string(trace_dev));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol) {
        throw ValidationError("NotPSD", -min_eig,
                              "density matrix has negative eigenvalue " + std::to_string(min_eig));
    }
}

}  // namespace

DensityMatrix DensityMatrix::validate(ComplexMatrix m, BipartiteDims dims, double tol) {
    return validate(std::move(m), std::vector<int>{dims.dim_a, dims.dim_b}, tol);
}

DensityMatrix DensityMatrix::validate(ComplexMatrix m, std::vector<int> local_dims, double tol) {
    std::int64_t total = 1;
    for (int d : local_dims) {
        if (d < 1) throw DimensionError("local dimension must be positive");
        total *= d;
    }
    if (m.rows() != total) {
        throw DimensionError("density matrix size " + std::to_string(m.rows()) +
                             " does not match product of local dims " + std::to_string(total));
    }
    check_density_invariants(m, tol);
    return DensityMatrix(std::move(m), std::move(local_dims));
}

BipartiteDims DensityMatrix::dims() const {
    if (!bipartite()) {
        throw DimensionError("state is not bipartite");
    }
    return {local_dims_[0], local_dims_[1]};
}

DensityMatrix validate_density(ComplexMatrix m, BipartiteDims dims, double tol) {
    return DensityMatrix::validate(std::move(m), dims, tol);
}

PureState PureState::from_coefficients(ComplexMatrix a, double tol) {
    const double norm_dev = std::abs(a.norm() - 1.0);
    if (norm_dev > tol) {
        throw ValidationError("NotNormalized", norm_dev,
                              "pure-state coefficient matrix has Frobenius norm " +
                                  std::to_string(a.norm()));
    }
    return PureState(std::move(a));
}

DensityMatrix PureState::to_density() const {
    ComplexVector k = ket();
    ComplexMatrix rho = k * k.adjoint();
    return DensityMatrix::validate(std::move(rho), dims());
}

SCCoefficients SCCoefficients::validate(ComplexMatrix c, int parties, double tol) {
    if (parties < 2) {
        throw DimensionError("SC state needs at least 2 parties");
    }
    if (c.rows() < 2) {
        throw DimensionError("SC coefficient matrix needs at least 2 levels");
    }
    check_density_invariants(c, tol);
    return SCCoefficients(std::move(c), parties);
}

SCCoefficients SCCoefficients::two_qubit(double c1, Complex c2, double c4, double tol) {
    ComplexMatrix c(2, 2);
    c << Complex(c1, 0.0), c2, std::conj(c2), Complex(c4, 0.0);
    // report the PSD violation in the coefficient language before the generic check
    const double psd_gap = c1 * c4 - std::norm(c2);
    if (psd_gap < -tol) {
        throw ValidationError("NotPSD", -psd_gap,
                              "c1*c4 >= |c2|^2 violated by " + std::to_string(-psd_gap));
    }
    return validate(std::move(c), 2, tol);
}

LocalUnitary2 LocalUnitary2::make(Complex a1, Complex a2, Complex b1, Complex b2, double tol) {
    const double na = std::norm(a1) + std::norm(a2);
    const double nb = std::norm(b1) + std::norm(b2);
    if (std::abs(na - 1.0) > tol || std::abs(nb - 1.0) > tol) {
        throw ValidationError("NotNormalized", std::max(std::abs(na - 1.0), std::abs(nb - 1.0)),
                              "local unitary rows not normalized");
    }
    return LocalUnitary2{a1, a2, b1, b2};
}

LocalUnitary2 LocalUnitary2::random(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto pair = [&]() {
        Complex u(gauss(rng), gauss(rng));
        Complex v(gauss(rng), gauss(rng));
        const double n = std::sqrt(std::norm(u) + std::norm(v));
        return std::pair<Complex, Complex>{u / n, v / n};
    };
    auto [a1, a2] = pair();
    auto [b1, b2] = pair();
    return LocalUnitary2{a1, a2, b1, b2};
}

Eigen::Matrix2cd LocalUnitary2::factor_a() const {
    Eigen::Matrix2cd u;
    u << a1, -a2, std::conj(a2), std::conj(a1);
    return u;
}

Eigen::Matrix2cd LocalUnitary2::factor_b() const {
    Eigen::Matrix2cd u;
    u << b1, -b2, std::conj(b2), std::conj(b1);
    return u;
}

DensityMatrix sc_embed(const SCCoefficients& sc) {
    const int d = sc.levels();
    const int parties = sc.parties();
    const std::int64_t total = pow_int(d, parties);
    // |m...m> has composite index m * (d^parties - 1) / (d - 1)
    const std::int64_t stride = (total - 1) / (d - 1);
    ComplexMatrix rho = ComplexMatrix::Zero(total, total);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            rho(m * stride, n * stride) = sc.coefficients()(m, n);
        }
    }
    return DensityMatrix::validate(std::move(rho), std::vector<int>(parties, d));
}

ComplexMatrix haar_unitary(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_unitary(dim, rng);
}

ComplexMatrix haar_unitary(int dim, std::mt19937_64& rng) {
    if (dim < 1) {
        throw DimensionError("haar_unitary: dim must be >= 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // absorb the R-diagonal phases so the distribution is Haar
    for (int j = 0; j < dim; ++j) {
        const Complex rjj = r(j, j);
        q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

ComplexVector random_pure_ket(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = Complex(gauss(rng), gauss(rng));
    }
    return v / v.norm();
}

SCCoefficients random_sc(std::uint64_t seed, int n_levels, int parties) {
    std::mt19937_64 rng(seed);
    return random_sc(rng, n_levels, parties);
}

SCCoefficients random_sc(std::mt19937_64& rng, int n_levels, int parties) {
    if (n_levels < 2) {
        throw DimensionError("random_sc: n_levels must be >= 2");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix b(n_levels, n_levels);
    for (int i = 0; i < n_levels; ++i) {
        for (int j = 0; j < n_levels; ++j) {
            b(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    ComplexMatrix gram = b * b.adjoint();
    gram /= gram.trace().real();
    // exact Hermiticity, then validate
    gram = ((gram + gram.adjoint()) / 2.0).eval();
    return SCCoefficients::validate(std::move(gram), parties);
}

DensityMatrix conjugate_by_locals(const DensityMatrix& rho,
                                  const std::vector<ComplexMatrix>& unitaries) {
    if (unitaries.size() != rho.local_dims().size()) {
        throw DimensionError("conjugate_by_locals: factor count does not match party count");
    }
    for (std::size_t p = 0; p < unitaries.size(); ++p) {
        if (unitaries[p].rows() != rho.local_dims()[p] ||
            unitaries[p].cols() != rho.local_dims()[p]) {
            throw DimensionError("conjugate_by_locals: factor " + std::to_string(p) +
                                 " has wrong dimension");
        }
    }
    ComplexMatrix w = kron_all(unitaries);
    ComplexMatrix out = w * rho.matrix() * w.adjoint();
    return DensityMatrix::validate(std::move(out), rho.local_dims());
}

DensityMatrix conjugate_by_locals(const DensityMatrix& rho, const LocalUnitary2& u) {
    return conjugate_by_locals(rho, {u.factor_a(), u.factor_b()});
}

}  // namespace lueq
