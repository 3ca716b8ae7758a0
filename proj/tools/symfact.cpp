#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symfact/factorize.hpp"
#include "symfact/io.hpp"
#include "symfact/rng.hpp"

namespace {

using namespace symfact;

// Exit codes, also documented in the README:
//   0 success          5 convergence / refinement failure
//   1 checks failed    6 invalid factorization / symmetry violation
//   2 parse or I/O     7 near-defective / non-real spectrum / conditioning
//   3 invalid input    8 inertia bound violation
//   4 singular matrix  9 internal consistency failure
int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const InvalidSpec*>(&e) || dynamic_cast<const InvalidBlock*>(&e) ||
        dynamic_cast<const InvalidSplit*>(&e) || dynamic_cast<const DimensionMismatch*>(&e) ||
        dynamic_cast<const NotApplicable*>(&e))
        return 3;
    if (dynamic_cast<const SingularMatrix*>(&e)) return 4;
    if (dynamic_cast<const ConvergenceFailure*>(&e) || dynamic_cast<const RefineFailure*>(&e) ||
        dynamic_cast<const CapExceeded*>(&e) || dynamic_cast<const AmbiguousSpectrum*>(&e))
        return 5;
    if (dynamic_cast<const InvalidFactorization*>(&e) || dynamic_cast<const NotSymmetric*>(&e) ||
        dynamic_cast<const NotSPD*>(&e) || dynamic_cast<const NotJordanBlock*>(&e))
        return 6;
    if (dynamic_cast<const NearDefective*>(&e) || dynamic_cast<const NotRealSpectrum*>(&e) ||
        dynamic_cast<const IllConditioned*>(&e))
        return 7;
    if (dynamic_cast<const BoundViolation*>(&e)) return 8;
    if (dynamic_cast<const CountMismatch*>(&e) || dynamic_cast<const KernelMismatch*>(&e) ||
        dynamic_cast<const OracleInconsistency*>(&e) || dynamic_cast<const InternalError*>(&e))
        return 9;
    return 1;
}

void apply_config_file(Config& cfg, const std::string& path) {
    const auto j = ordered_json::parse(read_file(path));
    cfg.sym_tol = j.value("sym_tol", cfg.sym_tol);
    cfg.zero_tol = j.value("zero_tol", cfg.zero_tol);
    cfg.pair_tol = j.value("pair_tol", cfg.pair_tol);
    cfg.pivot_tol = j.value("pivot_tol", cfg.pivot_tol);
    cfg.max_sweeps = j.value("max_sweeps", cfg.max_sweeps);
    cfg.gap_tol_rel = j.value("gap_tol_rel", cfg.gap_tol_rel);
    cfg.cond_cap = j.value("cond_cap", cfg.cond_cap);
    cfg.size_cap = j.value("size_cap", cfg.size_cap);
    cfg.grid_size = j.value("grid_size", cfg.grid_size);
    cfg.refine_tol = j.value("refine_tol", cfg.refine_tol);
    cfg.cluster_tol = j.value("cluster_tol", cfg.cluster_tol);
    cfg.null_space_tol = j.value("null_space_tol", cfg.null_space_tol);
    cfg.singular_det_tol = j.value("singular_det_tol", cfg.singular_det_tol);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.samples = j.value("samples", cfg.samples);
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

int cmd_factorize(const std::string& input, const std::string& path_flag,
                  const std::string& s_file, bool random_s, const std::string& out_prefix,
                  const Config& cfg) {
    const std::string text = read_file(input);
    DenseMatrix b;
    std::optional<SymFactorization> fact;

    if (path_flag == "spec" || (path_flag == "auto" && looks_like_json(text))) {
        const SpectrumSpec spec = spec_from_json(ordered_json::parse(text));
        const std::size_t m = spec.dimension();
        DenseMatrix s = DenseMatrix::identity(m);
        if (!s_file.empty()) {
            s = load_matrix(s_file);
        } else if (random_s) {
            Rng rng(cfg.seed);
            s = random_well_conditioned(m, rng);
        }
        auto [built, f] = factorize_from_spec(spec, s, cfg);
        b = built;
        fact = f;
        save_matrix(out_prefix + "_B.txt", b);
    } else {
        b = parse_matrix(text);
        if (path_flag == "spd") {
            fact = factorize_spd(b, cfg);
        } else if (path_flag == "distinct") {
            fact = factorize_distinct(b, cfg);
        } else {
            const EigenvalueSet eigs = general_eigenvalues(b, cfg);
            fact = eigs.complex_pairs.empty() ? factorize_spd(b, cfg)
                                              : factorize_distinct(b, cfg);
        }
    }

    save_matrix(out_prefix + "_T.txt", fact->T);
    save_matrix(out_prefix + "_W.txt", fact->W);
    std::cout << factorization_to_json(*fact).dump(2) << "\n";
    return 0;
}

int cmd_certify(const std::string& b_file, const std::string& t_file,
                const std::string& w_file, const Config& cfg) {
    const DenseMatrix b = load_matrix(b_file);
    SymFactorization fact;
    fact.T = load_matrix(t_file);
    fact.W = load_matrix(w_file);
    fact.symmetry_residuals = {symmetry_defect(fact.T), symmetry_defect(fact.W)};
    if (fact.symmetry_residuals.first > 1e-9 || fact.symmetry_residuals.second > 1e-9) {
        throw InvalidFactorization("supplied factor is not symmetric");
    }
    fact.inertia_T = inertia(fact.T, cfg);
    fact.inertia_W = inertia(fact.W, cfg);
    const Certificate cert = certify(b, fact, cfg);
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return cert.overall_pass() ? 0 : 1;
}

int cmd_scan(const std::string& t_file, const std::string& w_file, const std::string& kind,
             int grid, const std::string& csv_prefix, const Config& cfg) {
    const DenseMatrix t = load_matrix(t_file);
    const DenseMatrix w = load_matrix(w_file);

    ordered_json out;
    out["schema"] = "v1";
    std::optional<PencilScan> scan_v, scan_u;
    if (kind == "V" || kind == "both") {
        scan_v = scan(PencilKind::V, t, w, grid, cfg);
        out["V"] = scan_to_json(*scan_v);
        if (!csv_prefix.empty()) write_file(csv_prefix + "_V.csv", scan_to_csv(*scan_v));
    }
    if (kind == "U" || kind == "both") {
        scan_u = scan(PencilKind::U, t, w, grid, cfg);
        out["U"] = scan_to_json(*scan_u);
        if (!csv_prefix.empty()) write_file(csv_prefix + "_U.csv", scan_to_csv(*scan_u));
    }
    if (scan_v && scan_u) {
        const CountReport report = verify_counts(*scan_v, *scan_u, inertia(t, cfg),
                                                 inertia(w, cfg), t, w, cfg);
        out["verify"] = {{"required_negative", report.required_negative},
                         {"required_positive", report.required_positive},
                         {"found_negative", report.found_negative},
                         {"found_positive", report.found_positive},
                         {"counts_ok", report.counts_ok},
                         {"worst_eigenvalue_mismatch", report.worst_eigenvalue_mismatch}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_census(const std::string& b_file, int samples, std::uint64_t seed, const Config& cfg) {
    const DenseMatrix b = load_matrix(b_file);
    const SymmetrizerBasis basis = symmetrizer_basis(b, cfg);
    const InertiaCensus census =
        sample_census(basis, b, static_cast<std::size_t>(samples), seed, cfg);
    const CensusBoundsReport report = census_vs_bounds(census, general_eigenvalues(b, cfg));
    std::cout << census_to_json(census, basis, report).dump(2) << "\n";
    return 0;
}

int cmd_generate(const std::string& kind, int m, std::uint64_t seed, int pairs, int pos,
                 int neg, double lambda, const std::string& out_prefix, const Config& cfg) {
    Rng rng(seed);
    SpectrumSpec spec;
    if (kind == "all-complex") {
        spec = random_all_complex_spectrum(static_cast<std::size_t>(m), rng);
    } else if (kind == "mixed") {
        if (2 * pairs + pos + neg != m) {
            throw InvalidSpec("2*pairs + pos + neg must equal m");
        }
        spec = random_simple_spectrum(pairs, pos, neg, rng);
    } else if (kind == "example2") {
        spec.real_blocks.push_back({lambda, m});
    } else if (kind == "example3") {
        // 6x6 with a simple pair and a double defective pair
        spec.complex_blocks.push_back({0.5, 1.5, 1});
        spec.complex_blocks.push_back({-1.0, 2.0, 2});
    } else {
        throw InvalidSpec("unknown ensemble kind: " + kind);
    }

    const DenseMatrix s = random_well_conditioned(spec.dimension(), rng);
    auto [b, fact] = factorize_from_spec(spec, s, cfg);
    (void)fact;
    save_matrix(out_prefix + "_B.txt", b);
    save_matrix(out_prefix + "_S.txt", s);
    write_file(out_prefix + "_spec.json", spec_to_json(spec).dump(2) + "\n");
    std::cout << "{\"schema\": \"v1\", \"m\": " << spec.dimension() << ", \"kind\": \"" << kind
              << "\"}\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric-symmetric factorization toolkit"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_file;
    app.add_option("--config", config_file, "JSON file with tolerance overrides");
    app.add_option("--seed", cfg.seed, "global random seed");
    app.add_option("--grid", cfg.grid_size, "pencil grid size");
    app.add_option("--samples", cfg.samples, "census sample count");
    app.add_option("--tol-sym", cfg.sym_tol, "symmetry tolerance");
    app.add_option("--tol-zero", cfg.zero_tol, "inertia zero tolerance");
    app.add_option("--tol-pair", cfg.pair_tol, "real-coercion tolerance");

    auto* fac = app.add_subcommand("factorize", "factor B (or a spectrum spec) as T*W");
    std::string fac_input, fac_path = "auto", fac_s, fac_out = "factor";
    bool fac_random_s = false;
    fac->add_option("input", fac_input, "matrix file or spectrum spec JSON")->required();
    fac->add_option("--path", fac_path, "auto|spec|distinct|spd")
        ->check(CLI::IsMember({"auto", "spec", "distinct", "spd"}));
    fac->add_option("--s-matrix", fac_s, "similarity matrix file (spec path)");
    fac->add_flag("--random-s", fac_random_s, "draw a random well-conditioned S (spec path)");
    fac->add_option("--out-prefix", fac_out, "output file prefix");

    auto* cert = app.add_subcommand("certify", "check the inertia bounds for B = T*W");
    std::string cert_b, cert_t, cert_w;
    cert->add_option("B", cert_b)->required();
    cert->add_option("T", cert_t)->required();
    cert->add_option("W", cert_w)->required();

    auto* scn = app.add_subcommand("scan", "trace pencil eigenvalue trajectories");
    std::string scan_t, scan_w, scan_kind = "both", scan_csv;
    scn->add_option("--t-matrix", scan_t, "T matrix file")->required();
    scn->add_option("--w-matrix", scan_w, "W matrix file")->required();
    scn->add_option("--kind", scan_kind, "V|U|both")
        ->check(CLI::IsMember({"V", "U", "both"}));
    scn->add_option("--csv-prefix", scan_csv, "write trajectory CSV files with this prefix");

    auto* cen = app.add_subcommand("census", "inertia census of the symmetrizer space");
    std::string cen_b;
    cen->add_option("B", cen_b)->required();

    auto* gen = app.add_subcommand("generate", "deterministic test-corpus generation");
    std::string gen_kind = "mixed", gen_out = "gen";
    int gen_m = 4, gen_pairs = 0, gen_pos = 0, gen_neg = 0;
    double gen_lambda = 2.0;
    gen->add_option("--kind", gen_kind, "all-complex|mixed|example2|example3");
    gen->add_option("--m", gen_m, "dimension");
    gen->add_option("--pairs", gen_pairs, "complex pair count (mixed)");
    gen->add_option("--pos", gen_pos, "positive real count (mixed)");
    gen->add_option("--neg", gen_neg, "negative real count (mixed)");
    gen->add_option("--lambda", gen_lambda, "eigenvalue for example2");
    gen->add_option("--out-prefix", gen_out, "output file prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_file.empty()) apply_config_file(cfg, config_file);

        if (fac->parsed()) {
            return cmd_factorize(fac_input, fac_path, fac_s, fac_random_s, fac_out, cfg);
        }
        if (cert->parsed()) return cmd_certify(cert_b, cert_t, cert_w, cfg);
        if (scn->parsed()) {
            return cmd_scan(scan_t, scan_w, scan_kind, cfg.grid_size, scan_csv, cfg);
        }
        if (cen->parsed()) return cmd_census(cen_b, cfg.samples, cfg.seed, cfg);
        if (gen->parsed()) {
            return cmd_generate(gen_kind, gen_m, cfg.seed, gen_pairs, gen_pos, gen_neg,
                                gen_lambda, gen_out, cfg);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 1;
}
