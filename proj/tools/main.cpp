// Command-line front end: state-file parsing, fixture generation, canonical
// forms, equivalence verdicts, correlation reports, and the verify suite.
// Exit codes: 0 ok, 1 property failure, 2 input error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lueq/correlations.hpp"
#include "lueq/equivalence.hpp"
#include "lueq/errors.hpp"
#include "lueq/invariants.hpp"
#include "lueq/io.hpp"
#include "lueq/sc_canonical.hpp"
#include "lueq/states.hpp"
#include "lueq/verify.hpp"

namespace {

using namespace lueq;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseError::Kind::MalformedSyntax, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

StateValue load_state(const std::string& path) { return parse_state_file(read_file(path)); }

std::string num(double v) { return JsonWriter::format_number(v); }

void write_matrix(JsonWriter& w, const ComplexMatrix& m) {
    w.begin_array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        w.begin_array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) w.value(m(r, c));
        w.end_array();
    }
    w.end_array();
}

void write_real_matrix(JsonWriter& w, const RealMatrix& m) {
    w.begin_array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        w.begin_array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) w.value(m(r, c));
        w.end_array();
    }
    w.end_array();
}

void write_real_vector(JsonWriter& w, const RealVector& v) {
    w.begin_array();
    for (Eigen::Index i = 0; i < v.size(); ++i) w.value(v(i));
    w.end_array();
}

void write_witness_pair(JsonWriter& w, const ComplexMatrix& a, const ComplexMatrix& b) {
    w.key("witness_a");
    write_matrix(w, a);
    w.key("witness_b");
    write_matrix(w, b);
}

DensityMatrix as_density(const StateValue& s) {
    if (const auto* sc = std::get_if<SCCoefficients>(&s)) return sc_embed(*sc);
    if (const auto* psi = std::get_if<PureState>(&s)) return psi->to_density();
    return std::get<DensityMatrix>(s);
}

// ---- canon ----------------------------------------------------------------

int run_canon(const std::string& path, const std::string& format) {
    const StateValue state = load_state(path);
    const auto* sc = std::get_if<SCCoefficients>(&state);
    if (sc == nullptr) {
        std::cerr << "canon expects an SC coefficient state (kind sc2q or sc)\n";
        return 2;
    }

    if (sc->two_qubit_form()) {
        const StandardForm2Q f = standard_form_2q(*sc);
        const DensityMatrix mapped = conjugate_by_locals(
            sc_embed(*sc), {ComplexMatrix(f.witness_a), ComplexMatrix(f.witness_b)});
        const double residual =
            (mapped.matrix() - sc_embed(f.coefficients()).matrix()).norm();
        if (format == "table") {
            std::printf("standard form  (%s, %s, %s)\n", num(f.lambda1).c_str(),
                        num(f.lambda2).c_str(), num(f.lambda4).c_str());
            std::printf("swapped        %s\n", f.swapped ? "yes" : "no");
            std::printf("residual       %s\n", num(residual).c_str());
            return 0;
        }
        JsonWriter w;
        w.begin_object();
        w.key("kind").value("standard_form_2q");
        w.key("lambda1").value(f.lambda1);
        w.key("lambda2").value(f.lambda2);
        w.key("lambda4").value(f.lambda4);
        w.key("swapped").value(f.swapped);
        write_witness_pair(w, f.witness_a, f.witness_b);
        w.key("residual").value(residual);
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    const GeneralSCForm f = standard_form_general(*sc);
    const DensityMatrix mapped = conjugate_by_locals(sc_embed(*sc), f.witnesses);
    const double residual = (mapped.matrix() - sc_embed(f.canonical).matrix()).norm();
    if (format == "table") {
        std::printf("levels %d, parties %d, residual %s\n", sc->levels(), sc->parties(),
                    num(residual).c_str());
        std::printf("permutation ");
        for (int p : f.permutation) std::printf("%d ", p);
        std::printf("\n");
        for (Eigen::Index m = 0; m < f.residual_phases.rows(); ++m) {
            for (Eigen::Index n = m + 1; n < f.residual_phases.cols(); ++n) {
                if (m >= 1 && std::abs(f.residual_phases(m, n)) > 0) {
                    std::printf("phi_%lld%lld %s\n", static_cast<long long>(m),
                                static_cast<long long>(n),
                                num(f.residual_phases(m, n)).c_str());
                }
            }
        }
        return 0;
    }
    JsonWriter w;
    w.begin_object();
    w.key("kind").value("standard_form_sc");
    w.key("levels").value(sc->levels());
    w.key("parties").value(sc->parties());
    w.key("canonical");
    write_matrix(w, f.canonical.coefficients());
    w.key("permutation").begin_array();
    for (int p : f.permutation) w.value(p);
    w.end_array();
    w.key("gauge_phases");
    write_real_vector(w, f.gauge_phases);
    w.key("residual_phases");
    write_real_matrix(w, f.residual_phases);
    w.key("witnesses").begin_array();
    for (const ComplexMatrix& u : f.witnesses) write_matrix(w, u);
    w.end_array();
    w.key("residual").value(residual);
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

// ---- equiv ----------------------------------------------------------------

void print_verdict_json(const std::string& status, double residual,
                        const std::optional<std::string>& certificate,
                        const ComplexMatrix* wa, const ComplexMatrix* wb) {
    JsonWriter w;
    w.begin_object();
    w.key("status").value(status);
    w.key("residual").value(residual);
    if (certificate) w.key("certificate").value(*certificate);
    if (wa != nullptr && wb != nullptr) write_witness_pair(w, *wa, *wb);
    w.end_object();
    std::cout << w.str() << "\n";
}

int verdict_out(const std::string& format, const std::string& status, double residual,
                const std::optional<std::string>& certificate = std::nullopt,
                const ComplexMatrix* wa = nullptr, const ComplexMatrix* wb = nullptr) {
    if (format == "table") {
        std::printf("%s  residual %s%s%s\n", status.c_str(), num(residual).c_str(),
                    certificate ? "  " : "", certificate ? certificate->c_str() : "");
    } else {
        print_verdict_json(status, residual, certificate, wa, wb);
    }
    return 0;
}

int equiv_sc(const SCCoefficients& a, const SCCoefficients& b, double tol,
             const std::string& format) {
    if (a.two_qubit_form() && b.two_qubit_form()) {
        const StandardForm2Q fa = standard_form_2q(a);
        const StandardForm2Q fb = standard_form_2q(b);
        if (sc_lu_equivalent(a, b, tol)) {
            const ComplexMatrix wa = fb.witness_a.adjoint() * fa.witness_a;
            const ComplexMatrix wb = fb.witness_b.adjoint() * fa.witness_b;
            const double residual =
                (conjugate_by_locals(sc_embed(a), {wa, wb}).matrix() - sc_embed(b).matrix())
                    .norm();
            return verdict_out(format, "equivalent", residual, std::nullopt, &wa, &wb);
        }
        const std::string cert = "standard forms differ: (" + num(fa.lambda1) + ", " +
                                 num(fa.lambda2) + ", " + num(fa.lambda4) + ") vs (" +
                                 num(fb.lambda1) + ", " + num(fb.lambda2) + ", " +
                                 num(fb.lambda4) + ")";
        return verdict_out(format, "not_equivalent", 0.0, cert);
    }

    const GeneralSCForm fa = standard_form_general(a);
    const GeneralSCForm fb = standard_form_general(b);
    const double gap =
        (fa.canonical.coefficients() - fb.canonical.coefficients()).cwiseAbs().maxCoeff();
    if (gap <= tol) {
        std::vector<ComplexMatrix> locals(fa.witnesses.size());
        for (std::size_t k = 0; k < locals.size(); ++k) {
            locals[k] = fb.witnesses[k].adjoint() * fa.witnesses[k];
        }
        const double residual =
            (conjugate_by_locals(sc_embed(a), locals).matrix() - sc_embed(b).matrix()).norm();
        if (format == "table") {
            std::printf("equivalent  residual %s\n", num(residual).c_str());
        } else {
            JsonWriter w;
            w.begin_object();
            w.key("status").value("equivalent");
            w.key("residual").value(residual);
            w.key("witnesses").begin_array();
            for (const ComplexMatrix& u : locals) write_matrix(w, u);
            w.end_array();
            w.end_object();
            std::cout << w.str() << "\n";
        }
        return 0;
    }
    return verdict_out(format, "not_equivalent", 0.0,
                       "canonical coefficient gap " + num(gap));
}

int run_equiv(const std::string& path_a, const std::string& path_b, double tol, int restarts,
              std::uint64_t seed, const std::string& format) {
    const StateValue sa = load_state(path_a);
    const StateValue sb = load_state(path_b);

    if (const auto* a = std::get_if<SCCoefficients>(&sa)) {
        if (const auto* b = std::get_if<SCCoefficients>(&sb)) {
            if (a->levels() != b->levels() || a->parties() != b->parties()) {
                return verdict_out(format, "not_equivalent", 0.0,
                                   std::string("shape mismatch"));
            }
            return equiv_sc(*a, *b, tol, format);
        }
    }
    if (const auto* a = std::get_if<PureState>(&sa)) {
        if (const auto* b = std::get_if<PureState>(&sb)) {
            const BipartiteDims da = a->dims();
            const BipartiteDims db = b->dims();
            if (da.dim_a != db.dim_a || da.dim_b != db.dim_b) {
                return verdict_out(format, "not_equivalent", 0.0,
                                   std::string("shape mismatch"));
            }
            const bool eq = pure_lu_equivalent(*a, *b, tol);
            return verdict_out(format, eq ? "equivalent" : "not_equivalent", 0.0,
                               eq ? std::nullopt
                                  : std::make_optional<std::string>(
                                        "Schmidt spectra differ"));
        }
    }

    const DensityMatrix ra = as_density(sa);
    const DensityMatrix rb = as_density(sb);
    if (!ra.bipartite() || !rb.bipartite() || ra.dims().dim_a != rb.dims().dim_a ||
        ra.dims().dim_b != rb.dims().dim_b) {
        return verdict_out(format, "not_equivalent", 0.0, std::string("shape mismatch"));
    }

    LuTestOptions opts;
    opts.tol = tol;
    opts.seed = seed;
    const EquivalenceVerdict v = nondegenerate_lu_test(ra, rb, opts);
    if (v.status == EquivalenceStatus::Equivalent) {
        return verdict_out(format, "equivalent", v.residual, std::nullopt,
                           &v.witness->first, &v.witness->second);
    }
    if (v.status == EquivalenceStatus::NotEquivalent) {
        return verdict_out(format, "not_equivalent", v.residual, v.certificate);
    }
    if (restarts > 0) {
        const BruteForceResult r = brute_force_lu_search(ra, rb, restarts, seed);
        if (r.residual < tol) {
            return verdict_out(format, "equivalent", r.residual, std::nullopt, &r.u1, &r.u2);
        }
        return verdict_out(format, "inconclusive", r.residual,
                           "best direct-search residual " + num(r.residual));
    }
    return verdict_out(format, "inconclusive", v.residual, v.certificate);
}

// ---- invariants -----------------------------------------------------------

int run_invariants(const std::string& path, double log_base, const std::string& format) {
    const StateValue state = load_state(path);

    if (const auto* psi = std::get_if<PureState>(&state)) {
        const SchmidtData s = schmidt_decompose(*psi);
        const std::vector<double> ia = invariants_I(*psi);
        RealVector probs = s.coefficients.array().square();
        const double entanglement = shannon_entropy(probs, log_base);
        if (format == "table") {
            std::printf("schmidt rank  %d\n", s.rank);
            std::printf("coefficients ");
            for (int i = 0; i < s.rank; ++i) std::printf(" %s", num(s.coefficients(i)).c_str());
            std::printf("\nentanglement  %s\n", num(entanglement).c_str());
            for (std::size_t a = 0; a < ia.size(); ++a) {
                std::printf("I_%zu           %s\n", a + 1, num(ia[a]).c_str());
            }
            return 0;
        }
        JsonWriter w;
        w.begin_object();
        w.key("kind").value("pure");
        w.key("schmidt_rank").value(s.rank);
        w.key("schmidt_coefficients");
        write_real_vector(w, s.coefficients);
        w.key("entanglement_entropy").value(entanglement);
        w.key("invariants_I").begin_array();
        for (double v : ia) w.value(v);
        w.end_array();
        w.end_object();
        std::cout << w.str() << "\n";
        return 0;
    }

    const DensityMatrix rho = as_density(state);
    const RealVector eigs = hermitian_eigs_descending(rho.matrix()).values;
    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    const double entropy = von_neumann_entropy(rho.matrix(), log_base);

    JsonWriter w;
    w.begin_object();
    w.key("kind").value("density");
    w.key("eigenvalues");
    write_real_vector(w, eigs);
    w.key("purity").value(purity);
    w.key("entropy").value(entropy);
    if (const auto* sc = std::get_if<SCCoefficients>(&state); sc && sc->two_qubit_form()) {
        const double delta = 1.0 - 4.0 * sc->c1() * sc->c4() +
                             4.0 * std::norm(sc->c2());
        w.key("delta").value(delta);
        w.key("entropy_via_delta").value(entropy_via_delta(*sc, log_base));
    }
    if (rho.bipartite()) {
        const BipartiteDims d = rho.dims();
        w.key("reduced_a");
        write_real_vector(
            w, hermitian_eigs_descending(partial_trace(rho.matrix(), d, Subsystem::B)).values);
        w.key("reduced_b");
        write_real_vector(
            w, hermitian_eigs_descending(partial_trace(rho.matrix(), d, Subsystem::A)).values);
        w.key("mutual_information").value(mutual_information(rho, log_base));
        const Representation rep = representation_of(rho);
        w.key("representation").begin_object();
        w.key("degenerate").value(rep.degenerate);
        w.key("records").begin_array();
        for (const RepresentationRecord& rec : rep.records) {
            w.begin_object();
            w.key("eigenvalue").value(rec.eigenvalue);
            w.key("schmidt_rank").value(rec.schmidt.rank);
            w.key("schmidt_coefficients");
            write_real_vector(w, rec.schmidt.coefficients);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_object();
    if (format == "table") {
        // single schema; the JSON is already line-oriented enough for humans
        std::cout << w.str() << "\n";
        return 0;
    }
    std::cout << w.str() << "\n";
    return 0;
}

// ---- correlations ---------------------------------------------------------

int run_correlations(const std::string& path, double log_base, int samples,
                     std::uint64_t seed, const std::string& format) {
    const StateValue state = load_state(path);
    const auto* sc = std::get_if<SCCoefficients>(&state);
    if (sc == nullptr || !sc->two_qubit_form()) {
        std::cerr << "correlations expects a two-qubit SC state (kind sc2q)\n";
        return 2;
    }
    const CorrelationReport r = correlation_report(*sc, log_base, samples, seed);
    const std::pair<const char*, double> rows[] = {
        {"mutual_information", r.mutual_information},
        {"c_m_measured", r.c_m_measured},
        {"d_m_measured", r.d_m_measured},
        {"c_m_closed_form", r.c_m_closed_form},
        {"d_m_closed_form", r.d_m_closed_form},
        {"d_r_closed_form", r.d_r_closed_form},
        {"d_r_direct", r.d_r_direct},
        {"c_r_direct", r.c_r_direct},
        {"c_r_closed_form", r.c_r_closed_form},
        {"c_r_optimized", r.c_r_optimized},
        {"separable_sampled_min", r.separable_sampled_min},
        {"separable_margin", r.separable_margin},
        {"delta_c_m", r.delta_c_m},
        {"delta_d_m", r.delta_d_m},
        {"delta_c_r", r.delta_c_r},
    };
    if (format == "table") {
        std::printf("%-22s %s\n", "log_base", num(r.log_base).c_str());
        for (const auto& [name, value] : rows) {
            std::printf("%-22s %s\n", name, num(value).c_str());
        }
        return 0;
    }
    JsonWriter w;
    w.begin_object();
    w.key("log_base").value(r.log_base);
    for (const auto& [name, value] : rows) w.key(name).value(value);
    w.end_object();
    std::cout << w.str() << "\n";
    return 0;
}

// ---- separable ------------------------------------------------------------

int run_separable(const std::string& path, int samples, std::uint64_t seed, double log_base,
                  const std::string& format) {
    const StateValue state = load_state(path);
    const auto* sc = std::get_if<SCCoefficients>(&state);
    if (sc == nullptr || sc->parties() != 2) {
        std::cerr << "separable expects a bipartite SC state\n";
        return 2;
    }
    const DensityMatrix rho = sc_embed(*sc);
    const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.dims(), Subsystem::B);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(pt, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    const bool sep = sc_separable(*sc);

    JsonWriter w;
    w.begin_object();
    w.key("separable").value(sep);
    w.key("min_partial_transpose_eigenvalue").value(min_eig);
    if (samples > 0 && sc->two_qubit_form()) {
        const SeparableBoundReport rep = separable_bound_check(*sc, samples, seed, log_base);
        w.key("relative_entropy_discord").value(rep.d_r);
        w.key("separable_sampled_min").value(rep.sampled_min);
        w.key("margin").value(rep.margin);
        w.key("dephased_state_attains").value(rep.chi0_attains);
        w.key("violated").value(rep.violated);
    }
    w.end_object();
    if (format == "table") {
        std::printf("separable  %s\nmin PT eigenvalue  %s\n", sep ? "yes" : "no",
                    num(min_eig).c_str());
    } else {
        std::cout << w.str() << "\n";
    }
    return 0;
}

// ---- random ---------------------------------------------------------------

int run_random(const std::string& kind, std::uint64_t seed, int levels, int parties, int dim_a,
               int dim_b) {
    std::mt19937_64 rng(seed);
    if (kind == "sc2q") {
        std::cout << serialize_state(random_sc(rng)) << "\n";
        return 0;
    }
    if (kind == "sc") {
        std::cout << serialize_state(random_sc(rng, levels, parties)) << "\n";
        return 0;
    }
    if (kind == "pure") {
        std::normal_distribution<double> gauss(0.0, 1.0);
        ComplexMatrix a(dim_a, dim_b);
        for (int i = 0; i < dim_a; ++i) {
            for (int j = 0; j < dim_b; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
        }
        std::cout << serialize_state(PureState::from_coefficients(a / a.norm())) << "\n";
        return 0;
    }
    if (kind == "density") {
        const int dim = dim_a * dim_b;
        std::exponential_distribution<double> expo(1.0);
        RealVector w(dim);
        for (int i = 0; i < dim; ++i) w(i) = expo(rng);
        w /= w.sum();
        const ComplexMatrix u = haar_unitary(dim, rng);
        const ComplexMatrix rho = u * w.asDiagonal() * u.adjoint();
        std::cout << serialize_state(validate_density((rho + rho.adjoint()) / 2.0,
                                                      {dim_a, dim_b}))
                  << "\n";
        return 0;
    }
    std::cerr << "unknown random kind: " << kind << " (sc2q, sc, pure, density)\n";
    return 2;
}

// ---- verify ---------------------------------------------------------------

int run_verify(std::uint64_t seed, double log_base, const std::string& format) {
    const VerifyReport report = run_verify_suite(seed, log_base);
    if (format == "table") {
        std::cout << verify_to_table(report);
    } else {
        std::cout << verify_to_json(report) << "\n";
    }
    return verify_passed(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local-unitary equivalence and correlation toolkit for bipartite states"};
    app.require_subcommand(1);

    std::string path_a, path_b, format = "json", kind;
    double tol = 1e-7, log_base = 2.0;
    std::uint64_t seed = 20260825;
    int restarts = 8, samples = 0, levels = 2, parties = 2, dim_a = 2, dim_b = 2;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* canon = app.add_subcommand("canon", "standard form of an SC state");
    canon->add_option("file", path_a)->required();
    add_format(canon);

    CLI::App* equiv = app.add_subcommand("equiv", "decide LU equivalence of two states");
    equiv->add_option("file_a", path_a)->required();
    equiv->add_option("file_b", path_b)->required();
    equiv->add_option("--tol", tol, "verification tolerance");
    equiv->add_option("--restarts", restarts, "direct-search restarts when inconclusive");
    equiv->add_option("--seed", seed);
    add_format(equiv);

    CLI::App* inv = app.add_subcommand("invariants", "LU invariants of a state");
    inv->add_option("file", path_a)->required();
    inv->add_option("--log-base", log_base);
    add_format(inv);

    CLI::App* corr = app.add_subcommand("correlations", "correlation report for an SC state");
    corr->add_option("file", path_a)->required();
    corr->add_option("--log-base", log_base);
    corr->add_option("--samples", samples, "separable Monte Carlo samples")
        ->default_val(2000);
    corr->add_option("--seed", seed);
    add_format(corr);

    CLI::App* sep = app.add_subcommand("separable", "separability of an SC state");
    sep->add_option("file", path_a)->required();
    sep->add_option("--samples", samples, "optional separable Monte Carlo samples");
    sep->add_option("--seed", seed);
    sep->add_option("--log-base", log_base);
    add_format(sep);

    CLI::App* rnd = app.add_subcommand("random", "emit a random state fixture");
    rnd->add_option("kind", kind, "sc2q, sc, pure, density")->required();
    rnd->add_option("--seed", seed);
    rnd->add_option("--levels", levels);
    rnd->add_option("--parties", parties);
    rnd->add_option("--dim-a", dim_a);
    rnd->add_option("--dim-b", dim_b);

    CLI::App* verify = app.add_subcommand("verify", "run the reconciliation suite");
    verify->add_option("--seed", seed);
    verify->add_option("--log-base", log_base);
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (canon->parsed()) return run_canon(path_a, format);
        if (equiv->parsed()) return run_equiv(path_a, path_b, tol, restarts, seed, format);
        if (inv->parsed()) return run_invariants(path_a, log_base, format);
        if (corr->parsed()) return run_correlations(path_a, log_base, samples, seed, format);
        if (sep->parsed()) return run_separable(path_a, samples, seed, log_base, format);
        if (rnd->parsed()) return run_random(kind, seed, levels, parties, dim_a, dim_b);
        if (verify->parsed()) return run_verify(seed, log_base, format);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
