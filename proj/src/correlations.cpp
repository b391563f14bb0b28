#include "lueq/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lueq/detail/optim.hpp"

namespace lueq {

namespace {

constexpr double kPi = std::numbers::pi;

// -p log p in the requested base, 0 at p <= 0
double nll(double p, double log_base) {
    return p > 0.0 ? -p * std::log(p) / std::log(log_base) : 0.0;
}

// entropy of a Hermitian PSD 2x2 with unit trace, via the characteristic
// polynomial
double entropy_2x2(const Eigen::Matrix2cd& m, double log_base) {
    const double tr = m.trace().real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return nll((tr + disc) / 2.0, log_base) + nll(std::max(0.0, (tr - disc) / 2.0), log_base);
}

// (I (x) <v|) rho (I (x) |v>): unnormalized conditional state of party A
// after projecting B onto |v>
Eigen::MatrixXcd contract_b(const ComplexMatrix& rho, int dim_a, const Eigen::Vector2cd& v) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
        for (int j = 0; j < dim_a; ++j) {
            Complex acc = 0.0;
            for (int b = 0; b < 2; ++b) {
                for (int bp = 0; bp < 2; ++bp) {
                    acc += std::conj(v(b)) * rho(i * 2 + b, j * 2 + bp) * v(bp);
                }
            }
            out(i, j) = acc;
        }
    }
    return out;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd s;
    s << 1.0, 0.0, 0.0, -1.0;
    return s;
}

Eigen::Matrix2cd bloch_state(const Eigen::Vector3d& r) {
    Eigen::Matrix2cd s;
    const Complex i(0.0, 1.0);
    s << 1.0 + r.z(), r.x() - i * r.y(), r.x() + i * r.y(), 1.0 - r.z();
    return 0.5 * s;
}

// cached -tr(rho log rho) makes repeated S(rho || sigma) against one rho cheap
double rel_entropy_cached(double tr_rho_log_rho, const ComplexMatrix& rho,
                          const ComplexMatrix& sigma, double log_base) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sigma);
    const double smax = es.eigenvalues().cwiseAbs().maxCoeff();
    double cross = 0.0;  // tr rho log sigma, natural log
    for (Eigen::Index j = 0; j < sigma.rows(); ++j) {
        const double q = es.eigenvalues()(j);
        const double weight = (es.eigenvectors().col(j).adjoint() * rho *
                               es.eigenvectors().col(j))(0)
                                  .real();
        if (q <= kSupportCutoff * smax) {
            if (weight > kSupportCutoff) {
                return std::numeric_limits<double>::infinity();
            }
            continue;
        }
        cross += weight * std::log(q);
    }
    return (tr_rho_log_rho - cross) / std::log(log_base);
}

double tr_rho_log_rho(const ComplexMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < rho.rows(); ++j) {
        const double p = es.eigenvalues()(j);
        if (p > 0.0) acc += p * std::log(p);
    }
    return acc;
}

}  // namespace

MeasurementParams MeasurementParams::from_axis(double theta, double phi) {
    const double half = theta / 2.0;
    return {std::cos(half), std::sin(half) * std::sin(phi), -std::sin(half) * std::cos(phi),
            0.0};
}

Eigen::Matrix2cd MeasurementParams::v() const {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd m;
    m << t + i * y3, i * y1 + y2, i * y1 - y2, t - i * y3;
    return m;
}

ProjectorPair measurement_projectors(const MeasurementParams& p) {
    const double norm = p.t * p.t + p.y1 * p.y1 + p.y2 * p.y2 + p.y3 * p.y3;
    if (std::abs(norm - 1.0) > 1e-10) {
        throw ValidationError("NotNormalized", std::abs(norm - 1.0),
                              "measurement params must satisfy t^2 + |y|^2 = 1");
    }
    const Eigen::Matrix2cd v = p.v();
    return {v.col(0) * v.col(0).adjoint(), v.col(1) * v.col(1).adjoint()};
}

std::vector<ConditionalOutcome> conditional_ensemble(const DensityMatrix& rho,
                                                     const ProjectorPair& b) {
    const BipartiteDims dims = rho.dims();
    if (dims.dim_b != 2) {
        throw DimensionError("conditional_ensemble: party B must be a qubit");
    }
    const ComplexMatrix id_a = ComplexMatrix::Identity(dims.dim_a, dims.dim_a);
    std::vector<ConditionalOutcome> out;
    for (const Eigen::Matrix2cd& bk : {b.first, b.second}) {
        const ComplexMatrix m = kron(id_a, bk);
        const ComplexMatrix num = m * rho.matrix() * m;
        const double p = num.trace().real();
        if (p > 1e-12) {
            out.push_back({p, DensityMatrix::validate(num / p, dims)});
        }
    }
    return out;
}

double mutual_information(const DensityMatrix& rho, double log_base) {
    const BipartiteDims dims = rho.dims();
    const ComplexMatrix ra = partial_trace(rho.matrix(), dims, Subsystem::B);
    const ComplexMatrix rb = partial_trace(rho.matrix(), dims, Subsystem::A);
    return von_neumann_entropy(ra, log_base) + von_neumann_entropy(rb, log_base) -
           von_neumann_entropy(rho.matrix(), log_base);
}

MeasuredCorrelation classical_correlation_measured(const DensityMatrix& rho,
                                                   const MeasurementOptOptions& opts) {
    const BipartiteDims dims = rho.dims();
    if (dims.dim_b != 2) {
        throw DimensionError("classical_correlation_measured: party B must be a qubit");
    }
    const int dim_a = dims.dim_a;

    // B_k is rank 1, so the conditional state factorizes and only the
    // entropy of the conditioned A-part contributes
    auto conditional_entropy = [&](double theta, double phi) {
        const Eigen::Matrix2cd v = MeasurementParams::from_axis(theta, phi).v();
        double s = 0.0;
        for (int k = 0; k < 2; ++k) {
            const Eigen::MatrixXcd ak = contract_b(rho.matrix(), dim_a, v.col(k));
            const double p = ak.trace().real();
            if (p <= 1e-12) continue;
            if (dim_a == 2) {
                s += p * entropy_2x2(ak / p, opts.log_base);
            } else {
                s += p * von_neumann_entropy(ak / p, opts.log_base);
            }
        }
        return s;
    };

    double best_theta = 0.0;
    double best_phi = 0.0;
    double best = std::numeric_limits<double>::infinity();
    const double dtheta = kPi / (opts.grid_theta - 1);
    const double dphi = 2.0 * kPi / opts.grid_phi;
    for (int i = 0; i < opts.grid_theta; ++i) {
        for (int j = 0; j < opts.grid_phi; ++j) {
            const double val = conditional_entropy(i * dtheta, j * dphi);
            if (val < best) {
                best = val;
                best_theta = i * dtheta;
                best_phi = j * dphi;
            }
        }
    }
    for (int stage = 0; stage < opts.refine_stages; ++stage) {
        best_theta = detail::golden_section_min(
            [&](double th) { return conditional_entropy(th, best_phi); }, best_theta - dtheta,
            best_theta + dtheta);
        best_phi = detail::golden_section_min(
            [&](double ph) { return conditional_entropy(best_theta, ph); }, best_phi - dphi,
            best_phi + dphi);
        best = conditional_entropy(best_theta, best_phi);
    }

    const ComplexMatrix ra = partial_trace(rho.matrix(), dims, Subsystem::B);
    MeasuredCorrelation result;
    result.c_m = von_neumann_entropy(ra, opts.log_base) - best;
    result.d_m = mutual_information(rho, opts.log_base) - result.c_m;
    result.argmax = MeasurementParams::from_axis(best_theta, best_phi);
    return result;
}

double entropy_via_delta(const SCCoefficients& sc, double log_base) {
    if (!sc.two_qubit_form()) {
        throw DimensionError("entropy_via_delta needs a two-qubit SC state");
    }
    const double delta = 1.0 - 4.0 * sc.c1() * sc.c4() + 4.0 * std::norm(sc.c2());
    if (delta < -1e-9 || delta > 1.0 + 1e-9) {
        throw ValidationError("DeltaOutOfRange", std::max(-delta, delta - 1.0),
                              "1 - 4 c1 c4 + 4 |c2|^2 must lie in [0, 1]");
    }
    const double root = std::sqrt(std::clamp(delta, 0.0, 1.0));
    return nll((1.0 + root) / 2.0, log_base) + nll((1.0 - root) / 2.0, log_base);
}

ScClosedForms sc_closed_forms(const SCCoefficients& sc, double log_base) {
    ScClosedForms forms;
    forms.c_m = 0.0;
    forms.inf_conditional_entropy = nll(sc.c1(), log_base) + nll(sc.c4(), log_base);
    forms.d_m = 2.0 * forms.inf_conditional_entropy - entropy_via_delta(sc, log_base);
    return forms;
}

DensityMatrix closest_classical_state(const SCCoefficients& sc) {
    ComplexMatrix diag = ComplexMatrix::Zero(sc.levels(), sc.levels());
    for (int m = 0; m < sc.levels(); ++m) {
        diag(m, m) = sc.coefficients()(m, m).real();
    }
    return sc_embed(SCCoefficients::validate(std::move(diag), sc.parties()));
}

RelativeEntropyDiscord discord_relative_entropy(const SCCoefficients& sc, double log_base) {
    if (!sc.two_qubit_form()) {
        throw DimensionError("discord_relative_entropy needs a two-qubit SC state");
    }
    RelativeEntropyDiscord d;
    d.closed_form = nll(sc.c1(), log_base) + nll(sc.c4(), log_base) -
                    entropy_via_delta(sc, log_base);
    d.direct = relative_entropy(sc_embed(sc).matrix(), closest_classical_state(sc).matrix(),
                                log_base);
    if (std::abs(d.closed_form - d.direct) > 1e-10) {
        throw std::logic_error("relative-entropy discord routes disagree");
    }
    return d;
}

RelativeClassicalCorrelation classical_correlation_relative(const SCCoefficients& sc,
                                                            double log_base) {
    if (!sc.two_qubit_form()) {
        throw DimensionError("classical_correlation_relative needs a two-qubit SC state");
    }
    const double c1 = sc.c1();
    const double c4 = sc.c4();
    const ComplexMatrix rho = sc_embed(sc).matrix();
    const double entropy = entropy_via_delta(sc, log_base);

    RelativeClassicalCorrelation r;
    const Eigen::Vector3d reduced_bloch(0.0, 0.0, c1 - c4);
    r.direct = relative_entropy(
        rho, kron(bloch_state(reduced_bloch), bloch_state(reduced_bloch)), log_base);
    r.closed_form = 2.0 * (nll(c1, log_base) * c1 + nll(c4, log_base) * c4) - entropy;

    const double cached = tr_rho_log_rho(rho);
    auto objective = [&](const std::vector<double>& p) {
        Eigen::Vector3d ra(p[0], p[1], p[2]);
        Eigen::Vector3d rb(p[3], p[4], p[5]);
        // keep the factors strictly inside the Bloch ball so the support
        // condition cannot blow up
        const double cap = 1.0 - 1e-12;
        if (ra.norm() > cap) ra *= cap / ra.norm();
        if (rb.norm() > cap) rb *= cap / rb.norm();
        return rel_entropy_cached(cached, rho, kron(bloch_state(ra), bloch_state(rb)),
                                  log_base);
    };
    const std::vector<std::vector<double>> starts = {
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, c1 - c4, 0.0, 0.0, c1 - c4},
        {0.3, -0.2, 0.1, -0.1, 0.4, 0.2},
    };
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    for (const auto& s : starts) {
        detail::NmResult res = detail::nelder_mead_polished(objective, s, 0.25, 2000, 1e-16, 3);
        if (res.value < best) {
            best = res.value;
            best_x = std::move(res.x);
        }
    }
    r.optimized = best;
    r.bloch_a = Eigen::Vector3d(best_x[0], best_x[1], best_x[2]);
    r.bloch_b = Eigen::Vector3d(best_x[3], best_x[4], best_x[5]);
    return r;
}

SeparableBoundReport separable_bound_check(const SCCoefficients& sc, int samples,
                                           std::uint64_t seed, double log_base) {
    if (!sc.two_qubit_form()) {
        throw DimensionError("separable_bound_check needs a two-qubit SC state");
    }
    const ComplexMatrix rho = sc_embed(sc).matrix();
    const double cached = tr_rho_log_rho(rho);

    SeparableBoundReport report;
    report.d_r = discord_relative_entropy(sc, log_base).closed_form;
    report.chi0_attains =
        std::abs(relative_entropy(rho, closest_classical_state(sc).matrix(), log_base) -
                 report.d_r) < 1e-9;

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    double min_val = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        // random 4-term mixture of product pure states: weights uniform on
        // the simplex, factors Haar
        double w[4];
        double wsum = 0.0;
        for (double& wi : w) {
            wi = expo(rng);
            wsum += wi;
        }
        ComplexMatrix sigma = ComplexMatrix::Zero(4, 4);
        for (double wi : w) {
            const ComplexVector a = random_pure_ket(2, rng);
            const ComplexVector b = random_pure_ket(2, rng);
            sigma += (wi / wsum) * kron(a * a.adjoint(), b * b.adjoint());
        }
        min_val = std::min(min_val, rel_entropy_cached(cached, rho, sigma, log_base));
    }
    report.sampled_min = min_val;
    report.margin = min_val - report.d_r;
    report.violated = report.margin < -1e-6;
    return report;
}

ConditionalClosedForm conditional_closed_form(const SCCoefficients& sc,
                                              const MeasurementParams& p) {
    if (!sc.two_qubit_form()) {
        throw DimensionError("conditional_closed_form needs a two-qubit SC state");
    }
    const double d = sc.c1() - sc.c4();
    const double x = p.x_parameter();
    const ProjectorPair b = measurement_projectors(p);
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

    ConditionalClosedForm out;
    out.p0 = 0.5 * (1.0 + d * x);
    out.p1 = 0.5 * (1.0 - d * x);
    out.rho0 = kron(0.5 * (id + ((d + x) / (1.0 + d * x)) * pauli_z()), b.first);
    out.rho1 = kron(0.5 * (id + ((d - x) / (1.0 - d * x)) * pauli_z()), b.second);
    return out;
}

CorrelationReport correlation_report(const SCCoefficients& sc, double log_base,
                                     int separable_samples, std::uint64_t seed) {
    const DensityMatrix rho = sc_embed(sc);

    CorrelationReport rep;
    rep.log_base = log_base;
    rep.mutual_information = mutual_information(rho, log_base);

    MeasurementOptOptions mopts;
    mopts.log_base = log_base;
    const MeasuredCorrelation measured = classical_correlation_measured(rho, mopts);
    rep.c_m_measured = measured.c_m;
    rep.d_m_measured = measured.d_m;

    const ScClosedForms closed = sc_closed_forms(sc, log_base);
    rep.c_m_closed_form = closed.c_m;
    rep.d_m_closed_form = closed.d_m;

    const RelativeEntropyDiscord dr = discord_relative_entropy(sc, log_base);
    rep.d_r_closed_form = dr.closed_form;
    rep.d_r_direct = dr.direct;

    const RelativeClassicalCorrelation cr = classical_correlation_relative(sc, log_base);
    rep.c_r_direct = cr.direct;
    rep.c_r_closed_form = cr.closed_form;
    rep.c_r_optimized = cr.optimized;

    const SeparableBoundReport sep = separable_bound_check(sc, separable_samples, seed, log_base);
    rep.separable_sampled_min = sep.sampled_min;
    rep.separable_margin = sep.margin;

    rep.delta_c_m = std::abs(rep.c_m_closed_form - rep.c_m_measured);
    rep.delta_d_m = std::abs(rep.d_m_closed_form - rep.d_m_measured);
    rep.delta_c_r = std::abs(rep.c_r_closed_form - rep.c_r_direct);
    return rep;
}

}  // namespace lueq
