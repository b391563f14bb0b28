#include "lueq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace lueq {

namespace {

void require_size(const ComplexMatrix& m, int rows, int cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw DimensionError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                             std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
    if (factors.empty()) {
        return ComplexMatrix::Identity(1, 1);
    }
    ComplexMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = kron(out, factors[i]);
    }
    return out;
}

ComplexMatrix realign(const ComplexMatrix& v, BipartiteDims dims) {
    const int m = dims.dim_a;
    const int n = dims.dim_b;
    require_size(v, m * n, m * n, "realign");
    ComplexMatrix out(m * m, n * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    out(i * m + j, k * n + l) = v(i * n + k, j * n + l);
                }
            }
        }
    }
    return out;
}

ComplexVector vec_row_major(const ComplexMatrix& m) {
    ComplexVector out(m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out(i * m.cols() + j) = m(i, j);
        }
    }
    return out;
}

ComplexMatrix unvec_row_major(const ComplexVector& v, int rows, int cols) {
    if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
        throw DimensionError("unvec: vector length does not match shape");
    }
    ComplexMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            out(i, j) = v(i * cols + j);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Subsystem which) {
    const int m = dims.dim_a;
    const int n = dims.dim_b;
    require_size(rho, m * n, m * n, "partial_trace");
    if (which == Subsystem::B) {
        ComplexMatrix out = ComplexMatrix::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k < n; ++k) {
                    out(i, j) += rho(i * n + k, j * n + k);
                }
            }
        }
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            for (int i = 0; i < m; ++i) {
                out(k, l) += rho(i * n + k, i * n + l);
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims, Subsystem which) {
    const int m = dims.dim_a;
    const int n = dims.dim_b;
    require_size(rho, m * n, m * n, "partial_transpose");
    ComplexMatrix out(m * n, m * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    if (which == Subsystem::B) {
                        out(i * n + k, j * n + l) = rho(i * n + l, j * n + k);
                    } else {
                        out(i * n + k, j * n + l) = rho(j * n + k, i * n + l);
                    }
                }
            }
        }
    }
    return out;
}

HermitianEigs hermitian_eigs_descending(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("hermitian_eigs: matrix not square");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigs: eigendecomposition failed");
    }
    const int d = static_cast<int>(m.rows());
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    auto lex_less = [&](int a, int b) {
        for (int r = 0; r < d; ++r) {
            const Complex& va = solver.eigenvectors()(r, a);
            const Complex& vb = solver.eigenvectors()(r, b);
            if (va.real() != vb.real()) return va.real() < vb.real();
            if (va.imag() != vb.imag()) return va.imag() < vb.imag();
        }
        return false;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double la = solver.eigenvalues()(a);
        double lb = solver.eigenvalues()(b);
        if (la != lb) return la > lb;
        return lex_less(a, b);
    });

    HermitianEigs out;
    out.values.resize(d);
    out.vectors.resize(d, d);
    for (int c = 0; c < d; ++c) {
        out.values(c) = solver.eigenvalues()(order[c]);
        ComplexVector v = solver.eigenvectors().col(order[c]);
        // rotate the first significant entry to be real non-negative
        for (int r = 0; r < d; ++r) {
            if (std::abs(v(r)) > 1e-8) {
                v *= std::conj(v(r)) / std::abs(v(r));
                break;
            }
        }
        out.vectors.col(c) = v;
    }
    return out;
}

int numerical_rank(const ComplexMatrix& m, double rel_cutoff) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) {
        return 0;
    }
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rel_cutoff * s(0)) {
            ++rank;
        }
    }
    return rank;
}

double shannon_entropy(const RealVector& p, double log_base) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) {
            acc -= p(i) * std::log(p(i));
        }
    }
    return acc / std::log(log_base);
}

double von_neumann_entropy(const ComplexMatrix& rho, double log_base) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho, Eigen::EigenvaluesOnly);
    return shannon_entropy(solver.eigenvalues(), log_base);
}

double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma, double log_base) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw DimensionError("relative_entropy: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> rho_eigs(rho);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> sigma_eigs(sigma);

    double tr_rho_log_rho = 0.0;
    for (Eigen::Index i = 0; i < rho_eigs.eigenvalues().size(); ++i) {
        double p = rho_eigs.eigenvalues()(i);
        if (p > 0.0) {
            tr_rho_log_rho += p * std::log(p);
        }
    }

    const double q_max = sigma_eigs.eigenvalues().cwiseAbs().maxCoeff();
    double tr_rho_log_sigma = 0.0;
    for (Eigen::Index j = 0; j < sigma_eigs.eigenvalues().size(); ++j) {
        const double q = sigma_eigs.eigenvalues()(j);
        const ComplexVector v = sigma_eigs.eigenvectors().col(j);
        const double w = std::max(0.0, (v.adjoint() * rho * v)(0, 0).real());
        if (q <= kSupportCutoff * q_max) {
            if (w > kSupportCutoff) {
                return std::numeric_limits<double>::infinity();
            }
            continue;
        }
        tr_rho_log_sigma += w * std::log(q);
    }
    return (tr_rho_log_rho - tr_rho_log_sigma) / std::log(log_base);
}

double unitarity_deviation(const ComplexMatrix& v) {
    if (v.rows() != v.cols()) {
        throw DimensionError("unitarity_deviation: matrix not square");
    }
    return (v.adjoint() * v - ComplexMatrix::Identity(v.rows(), v.cols())).norm();
}

}  // namespace lueq
