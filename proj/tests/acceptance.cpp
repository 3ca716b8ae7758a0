// Acceptance gate: one line per criterion, non-zero exit if any fails.
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symfact/certify.hpp"
#include "symfact/io.hpp"
#include "symfact/pencil.hpp"
#include "symfact/rng.hpp"
#include "symfact/symmetrizer.hpp"

using namespace symfact;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << number << ": " << name << "\n";
    } catch (const std::exception& e) {
        std::cout << "FAIL criterion " << number << ": " << name << " -- " << e.what() << "\n";
        ++failures;
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

SpectrumSpec example3_spec() {
    SpectrumSpec spec;
    spec.complex_blocks.push_back({0.5, 1.5, 1});
    spec.complex_blocks.push_back({-1.0, 2.0, 2});
    return spec;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main() {
    criterion(1, "6x6 double-defective complex pair golden factors", [] {
        const SpectrumSpec spec = example3_spec();
        const double c = 0.5, d = 1.5, a = -1.0, b = 2.0;
        const DenseMatrix y_expected(6, 6, {0, 1, 0, 0, 0, 0,
                                            1, 0, 0, 0, 0, 0,
                                            0, 0, 0, 0, 0, 1,
                                            0, 0, 0, 0, 1, 0,
                                            0, 0, 0, 1, 0, 0,
                                            0, 0, 1, 0, 0, 0});
        const DenseMatrix w_expected(6, 6, {d, c, 0, 0, 0, 0,
                                            c, -d, 0, 0, 0, 0,
                                            0, 0, 0, 0, b, a,
                                            0, 0, 0, 0, a, -b,
                                            0, 0, b, a, 0, 1,
                                            0, 0, a, -b, 1, 0});
        const auto [built, fact] = factorize_from_spec(spec, DenseMatrix::identity(6));
        (void)built;
        require(frobenius_norm(subtract(fact.T, y_expected)) <= 1e-12,
                "T differs from the expected exchange block-diagonal");
        require(frobenius_norm(subtract(fact.W, w_expected)) <= 1e-12,
                "W differs from the expected symmetric Jordan factor");
        require(fact.inertia_T == Inertia{3, 3, 0}, "inertia of T is not (3,3,0)");
        require(fact.inertia_W == Inertia{3, 3, 0}, "inertia of W is not (3,3,0)");

        Rng rng(2024);
        for (int trial = 0; trial < 50; ++trial) {
            const DenseMatrix s = random_well_conditioned(6, rng);
            const auto [bb, f] = factorize_from_spec(spec, s);
            (void)bb;
            require(f.inertia_T == Inertia{3, 3, 0} && f.inertia_W == Inertia{3, 3, 0},
                    "random-basis inertia drifted from (3,3,0)");
            require(f.reconstruction_residual <= 1e-8, "reconstruction residual above 1e-8");
        }
    });

    criterion(2, "single 4-chain: balanced inertias despite an all-real spectrum", [] {
        SpectrumSpec spec;
        spec.real_blocks.push_back({2.0, 4});
        Rng rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const DenseMatrix s = random_well_conditioned(4, rng);
            const auto [b, fact] = factorize_from_spec(spec, s);
            (void)b;
            require(fact.inertia_T == Inertia{2, 2, 0}, "inertia of T is not (2,2,0)");
            require(fact.inertia_W == Inertia{2, 2, 0}, "inertia of W is not (2,2,0)");
        }
        // the spectrum is all-real by construction: s = m = 4, so balanced
        // inertias do not imply non-real eigenvalues
        require(static_cast<int>(spec.dimension()) == 4 && spec.complex_blocks.empty(),
                "spectrum is not all-real");
    });

    criterion(3, "bracket fuzz: 500 certificates with zero failures", [] {
        Rng rng(1001);
        int done = 0;
        while (done < 500) {
            const int m = 2 * (1 + done % 4); // 2, 4, 6, 8
            const int pairs = done % (m / 2 + 1);
            const int reals = m - 2 * pairs;
            const int pos = (reals == 0) ? 0 : 1 + static_cast<int>(rng() % reals);
            const int neg = reals - pos;
            SpectrumSpec spec;
            if (reals == 0) {
                spec = random_all_complex_spectrum(static_cast<std::size_t>(m), rng);
            } else {
                spec = random_simple_spectrum(pairs, pos, neg, rng);
            }
            const DenseMatrix s = random_well_conditioned(spec.dimension(), rng);
            const auto [b, fact] = factorize_from_spec(spec, s);
            const Certificate cert = certify(b, fact);
            require(cert.overall_pass(),
                    "certificate failed at trial " + std::to_string(done));
            ++done;
        }
    });

    criterion(4, "all-non-real spectra force (m/2, m/2, 0) everywhere", [] {
        Rng rng(4242);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t m = 2 * (1 + trial % 3); // 2, 4, 6
            const SpectrumSpec spec = random_all_complex_spectrum(m, rng);
            const DenseMatrix s = random_well_conditioned(m, rng);
            const auto [b, fact] = factorize_from_spec(spec, s);
            const Inertia balanced{static_cast<int>(m) / 2, static_cast<int>(m) / 2, 0};
            require(fact.inertia_T == balanced && fact.inertia_W == balanced,
                    "factorization inertia is not balanced");
            const SymmetrizerBasis basis = symmetrizer_basis(b);
            const InertiaCensus census = sample_census(basis, b, 100, 1000 + trial);
            require(census.observed.size() == 1 &&
                        census.observed.begin()->first ==
                            std::tuple<int, int, int>{balanced.p, balanced.n, 0},
                    "census observed a non-balanced inertia");
        }
    });

    criterion(5, "pencil scans find and match the promised eigenvalue counts", [] {
        Rng rng(515);
        int done = 0;
        while (done < 200) {
            const int m = 2 + static_cast<int>(rng() % 5); // 2..6
            const int pt = 1 + static_cast<int>(rng() % m) % m;
            const int pw = 1 + static_cast<int>(rng() % m) % m;
            const DenseMatrix t =
                random_symmetric_with_inertia(Inertia{pt, m - pt, 0}, rng);
            const DenseMatrix w =
                random_symmetric_with_inertia(Inertia{pw, m - pw, 0}, rng);
            const PencilScan sv = scan(PencilKind::V, t, w, 256);
            const PencilScan su = scan(PencilKind::U, t, w, 256);
            const CountReport report =
                verify_counts(sv, su, inertia(t), inertia(w), t, w);
            require(report.counts_ok, "count check failed at trial " + std::to_string(done));
            require(report.worst_eigenvalue_mismatch <= 1e-6,
                    "mapped eigenvalue mismatch above 1e-6");
            ++done;
        }
    });

    criterion(6, "symmetrizer-space dimensions and censuses on closed forms", [] {
        const DenseMatrix rotation(2, 2, {0, -1, 1, 0});
        const SymmetrizerBasis rot_basis = symmetrizer_basis(rotation);
        require(rot_basis.space_dim == 2, "rotation space dimension is not 2");
        const InertiaCensus rot_census = sample_census(rot_basis, rotation, 1000, 1);
        require(rot_census.observed.size() == 1 &&
                    rot_census.observed.begin()->first == std::tuple<int, int, int>{1, 1, 0},
                "rotation census observed an inertia other than (1,1,0)");

        const SymmetrizerBasis id_basis = symmetrizer_basis(DenseMatrix::identity(2));
        require(id_basis.space_dim == 3, "identity space dimension is not 3");
        const InertiaCensus id_census =
            sample_census(id_basis, DenseMatrix::identity(2), 1000, 2);
        for (const auto key : {std::tuple<int, int, int>{2, 0, 0},
                               std::tuple<int, int, int>{0, 2, 0},
                               std::tuple<int, int, int>{1, 1, 0}}) {
            require(id_census.observed.count(key) == 1,
                    "identity census missed an admissible inertia");
        }

        const SymmetrizerBasis diag_basis = symmetrizer_basis(DenseMatrix(2, 2, {1, 0, 0, 2}));
        require(diag_basis.space_dim == 2, "diag(1,2) space dimension is not 2");
    });

    criterion(7, "positive definite path on real-diagonalisable matrices", [] {
        Rng rng(707);
        for (int trial = 0; trial < 100; ++trial) {
            const int m = 2 + trial % 7; // 2..8
            const int pos = 1 + static_cast<int>(rng() % m) % m;
            const SpectrumSpec spec = random_simple_spectrum(0, pos, m - pos, rng);
            const DenseMatrix s = random_well_conditioned(spec.dimension(), rng);
            const auto [b, planted] = factorize_from_spec(spec, s);
            (void)planted;
            const SymFactorization fact = factorize_spd(b);
            require(fact.inertia_T == Inertia{m, 0, 0}, "T is not positive definite");
            require(fact.inertia_W == Inertia{pos, m - pos, 0},
                    "inertia of W does not match the sign pattern");
            require(selfadjoint_similarity_check(b, fact) <= 1e-8,
                    "self-adjoint similarity defect above 1e-8");

            // T^{1/2} W T^{1/2} is symmetric with the eigenvalues of B
            const DenseMatrix root = spd_sqrt(fact.T);
            const DenseMatrix sym = multiply(multiply(root, fact.W), root);
            const SymmetricEigen se = symmetric_eigen(sym);
            std::vector<double> expected = general_eigenvalues(b).real_eigenvalues;
            require(expected.size() == se.values.size(), "eigenvalue count mismatch");
            for (std::size_t i = 0; i < expected.size(); ++i) {
                require(std::fabs(expected[i] - se.values[i]) <=
                            1e-8 * std::max(1.0, std::fabs(expected[i])),
                        "similar symmetric matrix eigenvalue off by more than 1e-8");
            }
        }
    });

    criterion(8, "congruence preserves inertia exactly across 200 random pairs", [] {
        Rng rng(808);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t m = 2 + static_cast<std::size_t>(trial % 7);
            const DenseMatrix a = random_symmetric(m, rng);
            const DenseMatrix s = random_well_conditioned(m, rng);
            const DenseMatrix c = multiply(multiply(transpose(s), a), s);
            require(inertia(c) == inertia(a),
                    "congruence changed the inertia at trial " + std::to_string(trial));
        }
    });

    criterion(9, "eigensolver residuals and the exchange-inertia formula", [] {
        Rng rng(909);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t m = 2 + static_cast<std::size_t>(trial % 11); // 2..12
            const DenseMatrix a = random_symmetric(m, rng);
            const SymmetricEigen eig = symmetric_eigen(a);
            DenseMatrix h(m, m);
            for (std::size_t i = 0; i < m; ++i) h(i, i) = eig.values[i];
            const DenseMatrix rebuilt =
                multiply(multiply(eig.vectors, h), transpose(eig.vectors));
            require(frobenius_norm(subtract(a, rebuilt)) <=
                        1e-10 * std::max(1.0, frobenius_norm(a)),
                    "reconstruction residual above 1e-10");
            const DenseMatrix gram = multiply(transpose(eig.vectors), eig.vectors);
            require(frobenius_norm(subtract(gram, DenseMatrix::identity(m))) <= 1e-10,
                    "orthogonality residual above 1e-10");
        }
        for (std::size_t k = 1; k <= 12; ++k) {
            require(exchange_inertia(k) == inertia(exchange_matrix(k)),
                    "exchange inertia formula mismatch at k=" + std::to_string(k));
        }
    });

    criterion(10, "fixed-seed CLI pipeline is byte-identical across runs", [] {
        const fs::path base = fs::temp_directory_path() / "symfact_acceptance";
        std::vector<std::string> outputs;
        for (int round = 0; round < 2; ++round) {
            const fs::path dir = base / ("run" + std::to_string(round));
            fs::remove_all(dir);
            fs::create_directories(dir);
            const std::string cli = std::string("\"") + SYMFACT_CLI_PATH + "\"";
            const std::vector<std::string> cmds = {
                cli + " --seed 31 generate --kind mixed --m 5 --pairs 1 --pos 2 --neg 1 "
                      "--out-prefix g >> all.json",
                cli + " factorize g_spec.json --s-matrix g_S.txt --out-prefix f >> all.json",
                cli + " certify f_B.txt f_T.txt f_W.txt >> all.json",
                cli + " --grid 128 scan --t-matrix f_T.txt --w-matrix f_W.txt --kind both "
                      ">> all.json",
                cli + " --samples 300 --seed 17 census f_B.txt >> all.json",
            };
            for (const std::string& c : cmds) {
                const std::string full = "cd \"" + dir.string() + "\" && " + c + " 2>/dev/null";
                require(std::system(full.c_str()) == 0, "pipeline command failed: " + c);
            }
            std::string combined = slurp(dir / "all.json");
            for (const char* f : {"g_B.txt", "g_S.txt", "g_spec.json", "f_B.txt", "f_T.txt",
                                  "f_W.txt"}) {
                combined += slurp(dir / f);
            }
            outputs.push_back(combined);
        }
        require(!outputs[0].empty(), "pipeline produced no output");
        require(outputs[0] == outputs[1], "repeated runs differ byte-for-byte");
    });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
