#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "lueq/correlations.hpp"

using namespace lueq;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kH03 = 0.8812908992306927;       // binary entropy h(0.3), bits
constexpr double kS072 = 0.7549427179427943;      // S of (0.7, 0.2, 0.3)
constexpr double kMi072 = 1.007639080518591;      // mutual information of the same
constexpr double kDr072 = 0.12634818128789838;    // h(0.3) - S
constexpr double kCrClosed072 = 0.06199279838028593;

SCCoefficients bell() { return SCCoefficients::two_qubit(0.5, 0.5, 0.5); }
SCCoefficients example072() { return SCCoefficients::two_qubit(0.7, 0.2, 0.3); }

}  // namespace

TEST_CASE("measurement parameters map axes to Bloch vectors") {
    const MeasurementParams north = MeasurementParams::from_axis(0.0, 0.0);
    REQUIRE(north.x_parameter() == Catch::Approx(1.0).margin(1e-12));
    const auto [b0n, b1n] = measurement_projectors(north);
    REQUIRE(std::abs(b0n(0, 0) - 1.0) < 1e-12);

    const MeasurementParams south = MeasurementParams::from_axis(kPi, 0.7);
    REQUIRE(south.x_parameter() == Catch::Approx(-1.0).margin(1e-12));
    const auto [b0s, b1s] = measurement_projectors(south);
    REQUIRE(std::abs(b0s(1, 1) - 1.0) < 1e-12);

    const MeasurementParams east = MeasurementParams::from_axis(kPi / 2.0, 0.0);
    REQUIRE(east.x_parameter() == Catch::Approx(0.0).margin(1e-12));
    const auto [b0e, b1e] = measurement_projectors(east);
    REQUIRE(std::abs(b0e(0, 1).real() - 0.5) < 1e-12);  // |+><+|

    REQUIRE(unitarity_deviation(east.v()) < 1e-12);
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> th(0.0, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const double theta = th(rng);
        const MeasurementParams p = MeasurementParams::from_axis(theta, th(rng));
        REQUIRE(p.x_parameter() == Catch::Approx(std::cos(theta)).margin(1e-12));
        const auto [b0, b1] = measurement_projectors(p);
        REQUIRE((b0 + b1 - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
        REQUIRE((b0 * b0 - b0).norm() < 1e-12);
        REQUIRE(std::abs(b0.trace() - 1.0) < 1e-12);
    }
}

TEST_CASE("measurement projectors reject unnormalized parameters") {
    MeasurementParams bad;
    bad.t = 1.0;
    bad.y3 = 0.5;
    REQUIRE_THROWS_AS(measurement_projectors(bad), ValidationError);
}

TEST_CASE("conditional ensemble of the Bell state in the shared eigenbasis") {
    const auto outcomes = conditional_ensemble(
        sc_embed(bell()), measurement_projectors(MeasurementParams::from_axis(0.0, 0.0)));
    REQUIRE(outcomes.size() == 2);
    REQUIRE(outcomes[0].probability == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(outcomes[1].probability == Catch::Approx(0.5).margin(1e-12));
    ComplexMatrix p00 = ComplexMatrix::Zero(4, 4);
    p00(0, 0) = 1.0;
    REQUIRE((outcomes[0].state.matrix() - p00).norm() < 1e-12);
    ComplexMatrix p11 = ComplexMatrix::Zero(4, 4);
    p11(3, 3) = 1.0;
    REQUIRE((outcomes[1].state.matrix() - p11).norm() < 1e-12);
}

TEST_CASE("mutual information: frozen example and the Bell maximum") {
    REQUIRE(mutual_information(sc_embed(example072())) ==
            Catch::Approx(kMi072).margin(1e-9));
    REQUIRE(mutual_information(sc_embed(bell())) == Catch::Approx(2.0).margin(1e-12));
    REQUIRE(mutual_information(sc_embed(bell()), std::exp(1.0)) ==
            Catch::Approx(2.0 * std::log(2.0)).margin(1e-12));
}

TEST_CASE("entropy via the discriminant") {
    REQUIRE(entropy_via_delta(example072()) == Catch::Approx(kS072).margin(1e-12));
    REQUIRE(entropy_via_delta(bell()) == 0.0);
    REQUIRE(entropy_via_delta(SCCoefficients::two_qubit(0.5, 0.0, 0.5)) ==
            Catch::Approx(1.0).margin(1e-12));
    REQUIRE(entropy_via_delta(example072()) ==
            Catch::Approx(von_neumann_entropy(sc_embed(example072()).matrix())).margin(1e-12));
}

TEST_CASE("measured classical correlation: Bell and classical references") {
    const MeasuredCorrelation mb = classical_correlation_measured(sc_embed(bell()));
    REQUIRE(mb.c_m == Catch::Approx(1.0).margin(1e-4));
    REQUIRE(mb.d_m == Catch::Approx(1.0).margin(1e-4));

    const MeasuredCorrelation mc = classical_correlation_measured(
        sc_embed(SCCoefficients::two_qubit(0.7, 0.0, 0.3)));
    REQUIRE(mc.c_m == Catch::Approx(kH03).margin(1e-6));
    REQUIRE(mc.d_m == Catch::Approx(0.0).margin(1e-6));
    // the optimum sits at the shared eigenbasis, x = +-1
    REQUIRE(std::abs(mc.argmax.x_parameter()) == Catch::Approx(1.0).margin(1e-3));
}

TEST_CASE("measured classical correlation requires a qubit on party B") {
    REQUIRE_THROWS_AS(classical_correlation_measured(DensityMatrix::validate(
                          ComplexMatrix::Identity(9, 9) / 9.0, BipartiteDims{3, 3})),
                      DimensionError);
}

TEST_CASE("closed-form record reports the stated expressions verbatim") {
    const ScClosedForms f = sc_closed_forms(example072());
    REQUIRE(f.c_m == 0.0);
    REQUIRE(f.inf_conditional_entropy == Catch::Approx(kH03).margin(1e-12));
    REQUIRE(f.d_m == Catch::Approx(2.0 * kH03 - kS072).margin(1e-12));
}

TEST_CASE("closest classical state dephases the off-diagonal") {
    const DensityMatrix chi = closest_classical_state(example072());
    REQUIRE(chi.matrix()(0, 0) == Complex(0.7, 0.0));
    REQUIRE(chi.matrix()(3, 3) == Complex(0.3, 0.0));
    REQUIRE(chi.matrix()(0, 3) == Complex(0.0, 0.0));
}

TEST_CASE("relative-entropy discord agrees across routes") {
    const RelativeEntropyDiscord d = discord_relative_entropy(example072());
    REQUIRE(d.closed_form == Catch::Approx(kDr072).margin(1e-9));
    REQUIRE(d.direct == Catch::Approx(d.closed_form).margin(1e-10));

    REQUIRE(discord_relative_entropy(bell()).direct == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(discord_relative_entropy(SCCoefficients::two_qubit(0.6, 0.0, 0.4)).direct ==
            Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("relative classical correlation: direct route equals mutual information") {
    const RelativeClassicalCorrelation cr = classical_correlation_relative(example072());
    REQUIRE(cr.direct == Catch::Approx(kMi072).margin(1e-9));
    REQUIRE(cr.closed_form == Catch::Approx(kCrClosed072).margin(1e-9));
    REQUIRE(cr.optimized == Catch::Approx(cr.direct).margin(1e-6));
    REQUIRE(cr.bloch_a(2) == Catch::Approx(0.4).margin(1e-3));
    REQUIRE(cr.bloch_b(2) == Catch::Approx(0.4).margin(1e-3));
    REQUIRE(std::abs(cr.bloch_a(0)) < 1e-3);
    REQUIRE(std::abs(cr.bloch_a(1)) < 1e-3);
}

TEST_CASE("separable Monte Carlo never undercuts the dephased distance") {
    const SeparableBoundReport rep = separable_bound_check(bell(), 500, 77);
    REQUIRE(rep.d_r == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(rep.chi0_attains);
    REQUIRE_FALSE(rep.violated);
    REQUIRE(rep.margin > -1e-6);

    const SeparableBoundReport cls =
        separable_bound_check(SCCoefficients::two_qubit(0.6, 0.0, 0.4), 200, 78);
    REQUIRE(cls.d_r == Catch::Approx(0.0).margin(1e-12));
    REQUIRE_FALSE(cls.violated);
}

TEST_CASE("conditional closed form: probabilities exact, states exact at the poles") {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> th(0.0, kPi);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 30; ++trial) {
        const SCCoefficients sc = random_sc(rng);
        const MeasurementParams p = MeasurementParams::from_axis(th(rng), ph(rng));
        const ConditionalClosedForm f = conditional_closed_form(sc, p);
        const auto outcomes = conditional_ensemble(sc_embed(sc), measurement_projectors(p));
        REQUIRE(outcomes.size() == 2);
        REQUIRE(outcomes[0].probability == Catch::Approx(f.p0).margin(1e-12));
        REQUIRE(outcomes[1].probability == Catch::Approx(f.p1).margin(1e-12));
    }

    const SCCoefficients sc = example072();
    const MeasurementParams pole = MeasurementParams::from_axis(0.0, 0.0);
    const ConditionalClosedForm f = conditional_closed_form(sc, pole);
    const auto outcomes = conditional_ensemble(sc_embed(sc), measurement_projectors(pole));
    REQUIRE((outcomes[0].state.matrix() - f.rho0).norm() < 1e-10);
    REQUIRE((outcomes[1].state.matrix() - f.rho1).norm() < 1e-10);
    REQUIRE(f.p0 == Catch::Approx(0.7).margin(1e-12));
}

TEST_CASE("conditional closed form misses the transverse Bell conditionals by 1/sqrt(2)") {
    const MeasurementParams p = MeasurementParams::from_axis(kPi / 2.0, 0.0);
    const ConditionalClosedForm f = conditional_closed_form(bell(), p);
    const auto outcomes = conditional_ensemble(sc_embed(bell()), measurement_projectors(p));
    const double gap = (outcomes[0].state.matrix() - f.rho0).norm();
    REQUIRE(gap == Catch::Approx(0.7071067811865476).margin(1e-10));
    // the direct conditional is pure; the closed form predicts a mixed A part
    REQUIRE(von_neumann_entropy(outcomes[0].state.matrix()) < 1e-10);
    REQUIRE(von_neumann_entropy(f.rho0) == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("correlation report aggregates all routes") {
    const CorrelationReport r = correlation_report(example072(), 2.0, 300, 9);
    REQUIRE(r.mutual_information == Catch::Approx(kMi072).margin(1e-9));
    REQUIRE(r.d_r_direct == Catch::Approx(kDr072).margin(1e-9));
    REQUIRE(r.d_r_closed_form == Catch::Approx(r.d_r_direct).margin(1e-10));
    REQUIRE(r.c_r_direct == Catch::Approx(kMi072).margin(1e-9));
    REQUIRE(r.c_m_closed_form == 0.0);
    REQUIRE(r.delta_c_m == Catch::Approx(r.c_m_measured).margin(1e-12));
    REQUIRE(r.delta_d_m ==
            Catch::Approx(std::abs(r.d_m_closed_form - r.d_m_measured)).margin(1e-12));
    REQUIRE(r.separable_margin == Catch::Approx(r.separable_sampled_min - r.d_r_direct)
                                      .margin(1e-12));
    REQUIRE(r.log_base == 2.0);
}
