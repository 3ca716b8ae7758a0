#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const fs::path& dir, const std::string& args) {
    const fs::path out_file = dir / "_stdout.txt";
    const std::string cmd = "cd \"" + dir.string() + "\" && \"" + SYMFACT_CLI_PATH + "\" " +
                            args + " > \"" + out_file.string() + "\" 2> _stderr.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = (status == -1) ? -1 : WEXITSTATUS(status);
    r.out = slurp(out_file);
    return r;
}

nlohmann::json parse_json(const std::string& text) {
    return nlohmann::json::parse(text);
}

} // namespace

int main() {
    const fs::path dir = fs::temp_directory_path() / "symfact_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);

    // generate -> factorize from the emitted spec -> certify round trip
    {
        const RunResult gen =
            run(dir, "--seed 42 generate --kind mixed --m 5 --pairs 1 --pos 2 --neg 1 "
                     "--out-prefix g");
        check(gen.exit_code == 0, "generate mixed exits 0");
        check(fs::exists(dir / "g_B.txt") && fs::exists(dir / "g_S.txt") &&
                  fs::exists(dir / "g_spec.json"),
              "generate writes B, S and the spec");

        const RunResult fac =
            run(dir, "factorize g_spec.json --s-matrix g_S.txt --out-prefix f");
        check(fac.exit_code == 0, "factorize from spec exits 0");
        const auto fac_json = parse_json(fac.out);
        check(fac_json.at("path") == "spec", "factorize reports the spec path");
        check(fac_json.at("reconstruction_residual").get<double>() <= 1e-10,
              "reconstruction residual is tiny");
        check(slurp(dir / "f_B.txt") == slurp(dir / "g_B.txt"),
              "rebuilt B matches the generated B byte for byte");

        const RunResult cert = run(dir, "certify f_B.txt f_T.txt f_W.txt");
        check(cert.exit_code == 0, "certify exits 0 on a valid factorization");
        const auto cert_json = parse_json(cert.out);
        check(cert_json.at("pass").get<bool>(), "certificate passes");
        check(cert_json.at("s").get<int>() == 3, "three real eigenvalues detected");

        const RunResult scan = run(dir, "--grid 128 scan --t-matrix f_T.txt --w-matrix f_W.txt "
                                        "--kind both --csv-prefix sc");
        check(scan.exit_code == 0, "scan exits 0");
        const auto scan_json = parse_json(scan.out);
        check(scan_json.at("verify").at("counts_ok").get<bool>(), "scan count check passes");
        check(fs::exists(dir / "sc_V.csv") && fs::exists(dir / "sc_U.csv"),
              "scan writes both CSV files");
        const std::string csv = slurp(dir / "sc_V.csv");
        check(csv.rfind("param,eig_1", 0) == 0, "CSV header names trajectories");

        const RunResult census = run(dir, "--samples 200 --seed 9 census f_B.txt");
        check(census.exit_code == 0, "census exits 0");
        const auto census_json = parse_json(census.out);
        check(census_json.at("bounds").at("all_within_bounds").get<bool>(),
              "census inertias stay within the bounds");
    }

    // determinism: identical seeds produce byte-identical outputs
    {
        const RunResult a = run(dir, "--seed 7 generate --kind all-complex --m 6 --out-prefix d1");
        const RunResult b = run(dir, "--seed 7 generate --kind all-complex --m 6 --out-prefix d2");
        check(a.exit_code == 0 && b.exit_code == 0, "repeat generation exits 0");
        check(slurp(dir / "d1_B.txt") == slurp(dir / "d2_B.txt"),
              "same seed gives identical generated matrices");
        const RunResult c1 = run(dir, "--samples 150 --seed 5 census d1_B.txt");
        const RunResult c2 = run(dir, "--samples 150 --seed 5 census d2_B.txt");
        check(c1.out == c2.out, "census output is byte-identical for identical inputs");
        const RunResult c3 = run(dir, "--samples 150 --seed 6 census d1_B.txt");
        check(c3.exit_code == 0, "census with another seed still exits 0");
    }

    // exit codes on failure paths
    {
        std::ofstream(dir / "bad.txt") << "this is not a matrix\n";
        check(run(dir, "factorize bad.txt").exit_code == 2, "parse failure exits 2");

        std::ofstream(dir / "bad_spec.json")
            << R"({"real_blocks":[{"lambda":0.0,"ell":1}],"complex_blocks":[]})";
        check(run(dir, "factorize bad_spec.json").exit_code == 3,
              "zero eigenvalue in a spec exits 3");

        std::ofstream(dir / "singular.txt") << "2 2\n1 2\n2 4\n";
        check(run(dir, "factorize singular.txt --path spd").exit_code == 4,
              "singular input exits 4");

        std::ofstream(dir / "rot.txt") << "2 2\n0 -1\n1 0\n";
        check(run(dir, "factorize rot.txt --path spd").exit_code == 7,
              "non-real spectrum on the spd path exits 7");

        // asymmetric factor rejected by certify
        std::ofstream(dir / "asym.txt") << "2 2\n1 1\n0 1\n";
        std::ofstream(dir / "id2.txt") << "2 2\n1 0\n0 1\n";
        check(run(dir, "certify id2.txt asym.txt id2.txt").exit_code == 6,
              "asymmetric factor exits 6");

        check(run(dir, "factorize missing_file.txt").exit_code == 2, "missing file exits 2");
        check(run(dir, "generate --kind mixed --m 4 --pairs 3").exit_code == 3,
              "inconsistent ensemble counts exit 3");
    }

    // defective example ensembles
    {
        const RunResult e2 =
            run(dir, "--seed 11 generate --kind example2 --m 4 --lambda 2.0 --out-prefix e2");
        check(e2.exit_code == 0, "single-block ensemble generates");
        const RunResult e2f =
            run(dir, "factorize e2_spec.json --s-matrix e2_S.txt --out-prefix e2f");
        check(e2f.exit_code == 0, "single-block spectrum factorizes through the spec path");
        const auto e2j = parse_json(e2f.out);
        // exchange inertia of a 4-chain: (2, 2, 0)
        check(e2j.at("inertia_T").at("p") == 2 && e2j.at("inertia_T").at("n") == 2,
              "4-chain factor T has the exchange inertia");

        const RunResult e3 = run(dir, "--seed 13 generate --kind example3 --out-prefix e3");
        check(e3.exit_code == 0, "defective complex ensemble generates");
        const RunResult e3f =
            run(dir, "factorize e3_spec.json --s-matrix e3_S.txt --out-prefix e3f");
        check(e3f.exit_code == 0, "defective complex spectrum factorizes");
        const auto e3j = parse_json(e3f.out);
        check(e3j.at("inertia_T").at("p") == 3 && e3j.at("inertia_T").at("n") == 3 &&
                  e3j.at("inertia_W").at("p") == 3 && e3j.at("inertia_W").at("n") == 3,
              "all-non-real 6x6 forces balanced inertias");
        const RunResult e3c = run(dir, "certify e3f_B.txt e3f_T.txt e3f_W.txt");
        check(e3c.exit_code == 0, "defective complex factorization certifies");
    }

    // config file overrides
    {
        std::ofstream(dir / "cfg.json") << R"({"samples": 50, "seed": 123})";
        const RunResult c = run(dir, "--config cfg.json census d1_B.txt");
        check(c.exit_code == 0, "config file census exits 0");
        check(parse_json(c.out).at("samples").get<int>() == 50,
              "config file sample count honoured");
    }

    std::cout << (failures == 0 ? "all cli tests passed\n"
                                : std::to_string(failures) + " cli test(s) failed\n");
    return failures == 0 ? 0 : 1;
}
