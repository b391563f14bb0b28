#include "lueq/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lueq {

namespace {

// Phase-normalize a Schmidt pair (u, b) so u's first significant entry is
// real non-negative; b absorbs the conjugate phase, keeping u b^T fixed.
void normalize_pair_phase(ComplexVector& u, ComplexVector& b) {
    for (Eigen::Index r = 0; r < u.size(); ++r) {
        if (std::abs(u(r)) > 1e-8) {
            const Complex phase = std::conj(u(r)) / std::abs(u(r));
            u *= phase;
            b *= std::conj(phase);
            return;
        }
    }
}

// Extend k orthonormal columns to a full orthonormal basis, keeping the
// originals as the first k columns.
ComplexMatrix complete_basis(const ComplexMatrix& cols) {
    const int dim = static_cast<int>(cols.rows());
    const int k = static_cast<int>(cols.cols());
    Eigen::HouseholderQR<ComplexMatrix> qr(cols);
    ComplexMatrix q = qr.householderQ();
    q.leftCols(k) = cols;
    // re-orthogonalize the completion against the exact originals
    for (int j = k; j < dim; ++j) {
        for (int i = 0; i < j; ++i) {
            q.col(j) -= q.col(i) * (q.col(i).adjoint() * q.col(j))(0, 0);
        }
        q.col(j) /= q.col(j).norm();
    }
    return q;
}

SchmidtData schmidt_from_matrix(const ComplexMatrix& a) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > kSchmidtCutoff) ++rank;
    }
    SchmidtData out;
    out.rank = rank;
    out.coefficients.resize(rank);
    out.left_basis.resize(a.rows(), rank);
    out.right_basis.resize(a.cols(), rank);
    for (int j = 0; j < rank; ++j) {
        out.coefficients(j) = s(j);
        ComplexVector u = svd.matrixU().col(j);
        // right Schmidt vector is the conjugate of the right singular vector
        ComplexVector b = svd.matrixV().col(j).conjugate();
        normalize_pair_phase(u, b);
        out.left_basis.col(j) = u;
        out.right_basis.col(j) = b;
    }
    return out;
}

}  // namespace

SchmidtData schmidt_decompose(const PureState& psi) {
    return schmidt_from_matrix(psi.coefficients());
}

ComplexMatrix schmidt_reconstruct(const SchmidtData& s) {
    ComplexMatrix a = ComplexMatrix::Zero(s.left_basis.rows(), s.right_basis.rows());
    for (int j = 0; j < s.rank; ++j) {
        a += s.coefficients(j) * s.left_basis.col(j) * s.right_basis.col(j).transpose();
    }
    return a;
}

std::vector<double> invariants_I(const PureState& psi, int max_alpha) {
    const ComplexMatrix& a = psi.coefficients();
    if (max_alpha <= 0) {
        max_alpha = static_cast<int>(std::min(a.rows(), a.cols()));
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const auto& s = svd.singularValues();
    std::vector<double> out(max_alpha);
    for (int alpha = 1; alpha <= max_alpha; ++alpha) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            acc += std::pow(s(i) * s(i), alpha);
        }
        out[alpha - 1] = acc;
    }
    return out;
}

bool pure_lu_equivalent(const PureState& psi, const PureState& phi, double tol) {
    if (psi.dims() != phi.dims()) {
        throw DimensionError("pure_lu_equivalent: dimension mismatch");
    }
    Eigen::JacobiSVD<ComplexMatrix> svd_a(psi.coefficients());
    Eigen::JacobiSVD<ComplexMatrix> svd_b(phi.coefficients());
    const double spectrum_gap =
        (svd_a.singularValues() - svd_b.singularValues()).cwiseAbs().maxCoeff();
    const bool by_spectrum = spectrum_gap < tol;

    const std::vector<double> ia = invariants_I(psi);
    const std::vector<double> ib = invariants_I(phi);
    double inv_gap = 0.0;
    for (std::size_t i = 0; i < ia.size(); ++i) {
        inv_gap = std::max(inv_gap, std::abs(ia[i] - ib[i]));
    }
    const bool by_invariants = inv_gap < 20.0 * static_cast<double>(ia.size()) * tol;

    if (by_spectrum != by_invariants) {
        throw std::logic_error("pure_lu_equivalent: Schmidt-spectrum and I_alpha criteria "
                               "disagree (spectrum gap " +
                               std::to_string(spectrum_gap) + ", invariant gap " +
                               std::to_string(inv_gap) + ")");
    }
    return by_spectrum;
}

Representation representation_of(const DensityMatrix& rho) {
    const BipartiteDims dims = rho.dims();
    const HermitianEigs eigs = hermitian_eigs_descending(rho.matrix());

    Representation rep;
    for (Eigen::Index i = 0; i + 1 < eigs.values.size(); ++i) {
        if (eigs.values(i) - eigs.values(i + 1) < kDegeneracyGap) {
            rep.degenerate = true;
        }
    }

    for (Eigen::Index i = 0; i < eigs.values.size(); ++i) {
        if (eigs.values(i) < kSupportCutoff) {
            break;  // descending order: all further eigenvalues are zero
        }
        RepresentationRecord rec;
        rec.eigenvalue = eigs.values(i);
        const ComplexMatrix coeff = unvec_row_major(eigs.vectors.col(i), dims.dim_a, dims.dim_b);
        rec.schmidt = schmidt_from_matrix(coeff);
        for (int j = 0; j + 1 < rec.schmidt.rank; ++j) {
            if (rec.schmidt.coefficients(j) - rec.schmidt.coefficients(j + 1) < kDegeneracyGap) {
                rep.degenerate = true;
            }
        }
        rep.records.push_back(std::move(rec));
    }
    if (rep.records.empty()) {
        throw ValidationError("NotPSD", 1.0, "state has no nonzero eigenvalue");
    }

    rep.basis_a = complete_basis(rep.records.front().schmidt.left_basis);
    rep.basis_b = complete_basis(rep.records.front().schmidt.right_basis);
    for (auto& rec : rep.records) {
        rec.x = rep.basis_a.adjoint() * rec.schmidt.left_basis;
        rec.y = rep.basis_b.adjoint() * rec.schmidt.right_basis;
    }
    return rep;
}

ComplexMatrix representation_reconstruct(const Representation& rep, BipartiteDims dims) {
    const int total = dims.total();
    ComplexMatrix rho = ComplexMatrix::Zero(total, total);
    for (const auto& rec : rep.records) {
        // rebuild the eigenvector from its Schmidt data, expanding X, Y in the
        // reference bases
        ComplexMatrix coeff = ComplexMatrix::Zero(dims.dim_a, dims.dim_b);
        const ComplexMatrix left = rep.basis_a * rec.x;
        const ComplexMatrix right = rep.basis_b * rec.y;
        for (int j = 0; j < rec.schmidt.rank; ++j) {
            coeff += rec.schmidt.coefficients(j) * left.col(j) * right.col(j).transpose();
        }
        const ComplexVector e = vec_row_major(coeff);
        rho += rec.eigenvalue * e * e.adjoint();
    }
    return rho;
}

}  // namespace lueq
