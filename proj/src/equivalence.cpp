#include "lueq/equivalence.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lueq/detail/optim.hpp"

namespace lueq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Hermitian traceless matrix from dim^2 - 1 real parameters: first the
// diagonal (last entry balances the trace), then re/im of the strict lower
// triangle.
ComplexMatrix hermitian_from_params(const double* p, int dim) {
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    double trace = 0.0;
    int idx = 0;
    for (int i = 0; i < dim - 1; ++i) {
        h(i, i) = p[idx++];
        trace += h(i, i).real();
    }
    h(dim - 1, dim - 1) = -trace;
    for (int i = 1; i < dim; ++i) {
        for (int j = 0; j < i; ++j) {
            const Complex z(p[idx], p[idx + 1]);
            idx += 2;
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

// exp(i H) for Hermitian H.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    ComplexVector phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        phases(i) = std::polar(1.0, es.eigenvalues()(i));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix phase_diagonal(const std::vector<double>& thetas_tail, int dim) {
    // first phase pinned to zero: global phase freedom
    ComplexVector d(dim);
    d(0) = 1.0;
    for (int i = 1; i < dim; ++i) {
        d(i) = std::polar(1.0, thetas_tail[i - 1]);
    }
    return ComplexMatrix(d.asDiagonal());
}

double second_singular_value(const ComplexMatrix& m) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues().size() > 1 ? svd.singularValues()(1) : 0.0;
}

}  // namespace

const char* to_string(EquivalenceStatus s) {
    switch (s) {
        case EquivalenceStatus::Equivalent: return "Equivalent";
        case EquivalenceStatus::NotEquivalent: return "NotEquivalent";
        case EquivalenceStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

TensorFactors extract_tensor_factors(const ComplexMatrix& v, BipartiteDims dims, double tol) {
    const int m = dims.dim_a;
    const int n = dims.dim_b;
    if (v.rows() != m * n || v.cols() != m * n) {
        throw DimensionError("extract_tensor_factors: size does not match dims");
    }
    const double unit_dev = unitarity_deviation(v);
    if (unit_dev > std::sqrt(static_cast<double>(m * n)) * 10.0 * tol) {
        throw NotUnitaryError("extract_tensor_factors: input not unitary, deviation " +
                                  std::to_string(unit_dev),
                              unit_dev);
    }

    const ComplexMatrix r = realign(v, dims);
    Eigen::JacobiSVD<ComplexMatrix> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double s1 = svd.singularValues()(0);
    const double s2 = svd.singularValues().size() > 1 ? svd.singularValues()(1) : 0.0;
    if (s2 >= tol * s1) {
        throw NotDecomposableError("realigned matrix has rank > 1 (sigma2/sigma1 = " +
                                       std::to_string(s2 / s1) + ")",
                                   s2 / s1);
    }

    // realign(u1 (x) u2) = vec(u1) vec(u2)^T = s1 * u . w^dagger
    const double root = std::sqrt(s1);
    ComplexMatrix u1 = unvec_row_major(root * svd.matrixU().col(0), m, m);
    ComplexMatrix u2 = unvec_row_major(root * svd.matrixV().col(0).conjugate(), n, n);

    // absorb the k-normalization so both factors are unitary
    const double scale = u1.norm() / std::sqrt(static_cast<double>(m));
    const double k = 1.0 / (scale * scale);
    u1 /= scale;
    u2 *= scale;

    // phase gauge: first significant entry of u1 real positive
    for (int i = 0; i < m; ++i) {
        bool found = false;
        for (int j = 0; j < m; ++j) {
            if (std::abs(u1(i, j)) > 1e-8) {
                const Complex phase = std::conj(u1(i, j)) / std::abs(u1(i, j));
                u1 *= phase;
                u2 *= std::conj(phase);
                found = true;
                break;
            }
        }
        if (found) break;
    }

    const double recon = (kron(u1, u2) - v).norm();
    if (recon >= 10.0 * tol) {
        throw NotDecomposableError("factor reconstruction residual " + std::to_string(recon) +
                                       " exceeds bound",
                                   s2 / s1);
    }
    return {std::move(u1), std::move(u2), k};
}

double spectral_distance(const DensityMatrix& rho, const DensityMatrix& rho2) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> a(rho.matrix(), Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> b(rho2.matrix(), Eigen::EigenvaluesOnly);
    return (a.eigenvalues() - b.eigenvalues()).cwiseAbs().maxCoeff();
}

std::optional<std::string> separating_invariant(const DensityMatrix& rho,
                                                const DensityMatrix& rho2, double tol) {
    const double spec = spectral_distance(rho, rho2);
    if (spec > tol) {
        return "global spectra differ by " + std::to_string(spec);
    }
    // purity vector tr rho^k, k = 2..dim
    ComplexMatrix pa = rho.matrix();
    ComplexMatrix pb = rho2.matrix();
    for (int k = 2; k <= rho.dim(); ++k) {
        pa = (pa * rho.matrix()).eval();
        pb = (pb * rho2.matrix()).eval();
        const double gap = std::abs(pa.trace().real() - pb.trace().real());
        if (gap > tol) {
            return "tr rho^" + std::to_string(k) + " differs by " + std::to_string(gap);
        }
    }
    if (rho.bipartite() && rho2.bipartite()) {
        for (Subsystem s : {Subsystem::A, Subsystem::B}) {
            const ComplexMatrix ra = partial_trace(rho.matrix(), rho.dims(), s);
            const ComplexMatrix rb = partial_trace(rho2.matrix(), rho2.dims(), s);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(ra, Eigen::EigenvaluesOnly);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> eb(rb, Eigen::EigenvaluesOnly);
            const double gap = (ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff();
            if (gap > tol) {
                const char* name = (s == Subsystem::A) ? "B" : "A";
                return std::string("reduced-state spectra on ") + name + " differ by " +
                       std::to_string(gap);
            }
        }
    }
    return std::nullopt;
}

EquivalenceVerdict nondegenerate_lu_test(const DensityMatrix& rho, const DensityMatrix& rho2,
                                         const LuTestOptions& opts) {
    if (rho.local_dims() != rho2.local_dims()) {
        throw DimensionError("nondegenerate_lu_test: dimension mismatch");
    }
    const BipartiteDims dims = rho.dims();
    const int total = dims.total();

    EquivalenceVerdict verdict;
    const double spec = spectral_distance(rho, rho2);
    if (spec > opts.spectral_tol) {
        verdict.status = EquivalenceStatus::NotEquivalent;
        verdict.certificate = "eigenvalue spectra differ by " + std::to_string(spec);
        verdict.residual = spec;
        return verdict;
    }

    const HermitianEigs ex = hermitian_eigs_descending(rho.matrix());
    const HermitianEigs ey = hermitian_eigs_descending(rho2.matrix());
    for (int i = 0; i + 1 < total; ++i) {
        if (ex.values(i) - ex.values(i + 1) < opts.degeneracy_gap) {
            verdict.status = EquivalenceStatus::Inconclusive;
            verdict.certificate = "spectrum degenerate (gap " +
                                  std::to_string(ex.values(i) - ex.values(i + 1)) +
                                  " below threshold); phase search not applicable";
            return verdict;
        }
    }

    // f(theta) = sigma_2(realign(X D(theta) Y^dagger)); zero exactly at
    // tensor-decomposable points
    const ComplexMatrix& x = ex.vectors;
    const ComplexMatrix& y = ey.vectors;
    auto objective = [&](const std::vector<double>& thetas) {
        const ComplexMatrix d = phase_diagonal(thetas, total);
        return second_singular_value(realign(x * d * y.adjoint(), dims));
    };

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<double> best_x;
    double best_f = std::numeric_limits<double>::infinity();
    for (int start = 0; start < opts.grid_seeds; ++start) {
        std::vector<double> x0(total - 1);
        if (start > 0) {
            for (auto& t : x0) t = angle(rng);
        }
        detail::NmResult res = detail::nelder_mead_polished(objective, std::move(x0), 1.2,
                                                            400, 1e-14, opts.polish_rounds);
        if (res.value < best_f) {
            best_f = res.value;
            best_x = std::move(res.x);
        }
        if (best_f < opts.tol * 1e-2) {
            break;  // already well below the decision threshold
        }
    }

    verdict.residual = best_f;
    if (best_f < opts.tol) {
        const ComplexMatrix d = phase_diagonal(best_x, total);
        const ComplexMatrix v = x * d * y.adjoint();
        try {
            TensorFactors factors = extract_tensor_factors(v, dims, opts.tol);
            // v^dagger rho v = rho2, so the witness is (v1^dagger, v2^dagger)
            ComplexMatrix w1 = factors.u1.adjoint();
            ComplexMatrix w2 = factors.u2.adjoint();
            const ComplexMatrix w = kron(w1, w2);
            const double residual = (w * rho.matrix() * w.adjoint() - rho2.matrix()).norm();
            if (residual < opts.tol) {
                verdict.status = EquivalenceStatus::Equivalent;
                verdict.witness = std::make_pair(std::move(w1), std::move(w2));
                verdict.residual = residual;
                return verdict;
            }
            verdict.residual = residual;
        } catch (const NotDecomposableError&) {
            // fall through to Inconclusive
        }
    }
    verdict.status = EquivalenceStatus::Inconclusive;
    verdict.certificate = "phase search best sigma_2 = " + std::to_string(best_f) +
                          "; no decomposable point found (search failure is not a "
                          "non-equivalence proof)";
    return verdict;
}

BruteForceResult brute_force_lu_search(const DensityMatrix& rho, const DensityMatrix& rho2,
                                       int restarts, std::uint64_t seed) {
    if (rho.local_dims() != rho2.local_dims()) {
        throw DimensionError("brute_force_lu_search: dimension mismatch");
    }
    const BipartiteDims dims = rho.dims();
    const int m = dims.dim_a;
    const int n = dims.dim_b;
    const int pa = m * m - 1;
    const int pb = n * n - 1;

    std::mt19937_64 rng(seed);
    BruteForceResult best;
    best.residual = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart < restarts; ++restart) {
        // restart 0 starts at the identity so rho vs rho converges immediately
        const ComplexMatrix base1 =
            (restart == 0) ? ComplexMatrix::Identity(m, m) : haar_unitary(m, rng);
        const ComplexMatrix base2 =
            (restart == 0) ? ComplexMatrix::Identity(n, n) : haar_unitary(n, rng);

        auto unitaries = [&](const std::vector<double>& p) {
            ComplexMatrix u1 = base1 * exp_i_hermitian(hermitian_from_params(p.data(), m));
            ComplexMatrix u2 = base2 * exp_i_hermitian(hermitian_from_params(p.data() + pa, n));
            return std::make_pair(std::move(u1), std::move(u2));
        };
        auto objective = [&](const std::vector<double>& p) {
            auto [u1, u2] = unitaries(p);
            const ComplexMatrix w = kron(u1, u2);
            return (w * rho.matrix() * w.adjoint() - rho2.matrix()).squaredNorm();
        };

        std::vector<double> x0(pa + pb, 0.0);
        detail::NmResult res =
            detail::nelder_mead_polished(objective, std::move(x0), 0.7, 1200, 1e-18, 3);
        const double residual = std::sqrt(std::max(0.0, res.value));
        if (residual < best.residual) {
            auto [u1, u2] = unitaries(res.x);
            best = {residual, std::move(u1), std::move(u2)};
        }
        if (best.residual < 1e-9) {
            break;
        }
    }
    return best;
}

}  // namespace lueq
