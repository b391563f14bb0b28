#include "lueq/sc_canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace lueq {

SCCoefficients StandardForm2Q::coefficients() const {
    return SCCoefficients::two_qubit(lambda1, lambda2, lambda4);
}

StandardForm2Q standard_form_2q(const SCCoefficients& sc) {
    if (!sc.two_qubit_form()) {
        throw DimensionError("standard_form_2q needs a two-qubit SC state");
    }
    const double c1 = sc.c1();
    const double c4 = sc.c4();
    const Complex c2 = sc.c2();
    const double lam2 = std::abs(c2);
    const double theta = lam2 > 0.0 ? std::arg(c2) : 0.0;

    StandardForm2Q form;
    if (c1 >= c4) {
        form.lambda1 = c1;
        form.lambda2 = lam2;
        form.lambda4 = c4;
        form.swapped = false;
        // diag(e^{-i theta}, 1) on one party rotates c2 onto the real axis
        form.witness_a << std::polar(1.0, -theta), 0.0, 0.0, 1.0;
        form.witness_b = Eigen::Matrix2cd::Identity();
    } else {
        form.lambda1 = c4;
        form.lambda2 = lam2;
        form.lambda4 = c1;
        form.swapped = true;
        // the level swap on both parties exchanges the diagonal and picks up
        // e^{-i theta} on the off-diagonal, splitting the phase across parties
        form.witness_a << 0.0, 1.0, std::polar(1.0, -theta / 2.0), 0.0;
        form.witness_b = form.witness_a;
    }
    return form;
}

bool sc_lu_equivalent(const SCCoefficients& a, const SCCoefficients& b, double tol) {
    const StandardForm2Q fa = standard_form_2q(a);
    const StandardForm2Q fb = standard_form_2q(b);
    return std::abs(fa.lambda1 - fb.lambda1) < tol && std::abs(fa.lambda2 - fb.lambda2) < tol &&
           std::abs(fa.lambda4 - fb.lambda4) < tol;
}

bool sc_family_equivalent(const SCCoefficients& a, const SCCoefficients& b, double tol) {
    if (!a.two_qubit_form() || !b.two_qubit_form()) {
        throw DimensionError("sc_family_equivalent needs two-qubit SC states");
    }
    const bool moduli = std::abs(std::abs(a.c2()) - std::abs(b.c2())) < tol;
    const bool straight =
        std::abs(a.c1() - b.c1()) < tol && std::abs(a.c4() - b.c4()) < tol;
    const bool crossed =
        std::abs(a.c1() - b.c4()) < tol && std::abs(a.c4() - b.c1()) < tol;
    return moduli && (straight || crossed);
}

GeneralSCForm standard_form_general(const SCCoefficients& sc) {
    const ComplexMatrix& c = sc.coefficients();
    const int n = sc.levels();
    const int parties = sc.parties();

    // the level with the largest diagonal entry lands in slot 0; its row
    // supplies the secondary sort key (smallest index wins exact ties)
    int top = 0;
    for (int m = 1; m < n; ++m) {
        if (c(m, m).real() > c(top, top).real()) top = m;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int p, int q) {
        if (c(p, p).real() != c(q, q).real()) return c(p, p).real() > c(q, q).real();
        const double mp = std::abs(c(top, p));
        const double mq = std::abs(c(top, q));
        if (mp != mq) return mp > mq;
        return std::arg(c(top, p)) < std::arg(c(top, q));
    });

    ComplexMatrix cp(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            cp(k, l) = c(perm[k], perm[l]);
        }
    }

    // phase gauge psi: a tree walk over the support graph of cp zeroes the
    // phase of every tree edge; roots (slot 0, then the smallest slot of each
    // later component) are pinned to zero
    RealVector psi = RealVector::Zero(n);
    std::vector<bool> visited(n, false);
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::queue<int> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const int m = frontier.front();
            frontier.pop();
            for (int l = 0; l < n; ++l) {
                if (visited[l] || std::abs(cp(m, l)) <= kSupportCutoff) continue;
                visited[l] = true;
                psi(l) = psi(m) + std::arg(cp(m, l));
                frontier.push(l);
            }
        }
    }

    ComplexMatrix gauged(n, n);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            gauged(k, l) = cp(k, l) * std::polar(1.0, psi(k) - psi(l));
        }
    }
    gauged = ((gauged + gauged.adjoint()) / 2.0).eval();

    GeneralSCForm form{SCCoefficients::validate(gauged, parties),
                       RealMatrix::Zero(n, n),
                       std::move(perm),
                       std::move(psi),
                       {}};
    for (int m = 1; m < n; ++m) {
        for (int l = m + 1; l < n; ++l) {
            if (std::abs(gauged(m, l)) > kSupportCutoff) {
                form.residual_phases(m, l) = std::arg(gauged(m, l));
            }
        }
    }

    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        p(k, form.permutation[k]) = 1.0;
    }
    ComplexMatrix phase = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        phase(k, k) = std::polar(1.0, form.gauge_phases(k));
    }
    form.witnesses.assign(parties, p);
    form.witnesses[0] = phase * p;
    return form;
}

bool sc_separable(const SCCoefficients& sc, double tol) {
    const ComplexMatrix& c = sc.coefficients();
    for (int m = 0; m < c.rows(); ++m) {
        for (int l = m + 1; l < c.cols(); ++l) {
            if (std::abs(c(m, l)) > tol) return false;
        }
    }
    return true;
}

bool pure_sc_equivalent(double a0, double a1, double b0, double b1, double tol) {
    auto check = [tol](double x0, double x1, const char* which) {
        if (x1 < 0.0 || x0 < x1) {
            throw ValidationError("NotSorted", x1 - x0,
                                  std::string(which) + " pair must satisfy x0 >= x1 >= 0");
        }
        const double norm_gap = std::abs(x0 * x0 + x1 * x1 - 1.0);
        if (norm_gap > 100 * tol) {
            throw ValidationError("NotNormalized", norm_gap,
                                  std::string(which) + " squares must sum to 1");
        }
    };
    check(a0, a1, "first");
    check(b0, b1, "second");
    return std::abs(a0 - b0) < tol && std::abs(a1 - b1) < tol;
}

}  // namespace lueq
