#include "symfact/factorize.hpp"

#include <cmath>
#include <complex>

namespace symfact {

std::string to_string(FactorizePath path) {
    switch (path) {
    case FactorizePath::SpectralSpec: return "spec";
    case FactorizePath::DistinctEigen: return "distinct";
    case FactorizePath::SPD: return "spd";
    }
    return "unknown";
}

namespace {

double path_residual_tol(FactorizePath path) {
    return path == FactorizePath::SpectralSpec ? 1e-10 : 1e-8;
}

void validate_factorization(const DenseMatrix& b, SymFactorization& fact, const Config& cfg) {
    fact.symmetry_residuals = {symmetry_defect(fact.T), symmetry_defect(fact.W)};
    if (fact.symmetry_residuals.first > 1e-9 || fact.symmetry_residuals.second > 1e-9) {
        throw InvalidFactorization("factor symmetry residual exceeds 1e-9");
    }
    const double bnorm = frobenius_norm(b);
    fact.reconstruction_residual =
        frobenius_norm(subtract(b, multiply(fact.T, fact.W))) / std::max(bnorm, 1e-300);
    if (fact.reconstruction_residual > path_residual_tol(fact.path)) {
        throw InvalidFactorization("reconstruction residual " +
                                   std::to_string(fact.reconstruction_residual) +
                                   " exceeds tolerance for path " + to_string(fact.path));
    }
    fact.inertia_T = inertia(fact.T, cfg);
    fact.inertia_W = inertia(fact.W, cfg);
    if (fact.inertia_T.z != 0 || fact.inertia_W.z != 0) {
        throw InvalidFactorization("factor numerically singular (zero inertia count)");
    }
}

} // namespace

std::pair<DenseMatrix, SymFactorization> factorize_from_spec(const SpectrumSpec& spec,
                                                             const DenseMatrix& s,
                                                             const Config& cfg) {
    spec.validate();
    const std::size_t m = spec.dimension();
    if (!s.square() || s.rows() != m) {
        throw DimensionMismatch("S must be square of the spec dimension");
    }
    if (condition_estimate(s, cfg.pivot_tol) > cfg.cond_cap) {
        throw IllConditioned("similarity matrix S exceeds the condition cap");
    }

    const JordanAssembly asm_ = assemble(spec, cfg);
    const DenseMatrix s_inv = invert(s, cfg.pivot_tol);
    const DenseMatrix s_inv_t = transpose(s_inv);

    const DenseMatrix b = multiply(multiply(s, asm_.J), s_inv);
    SymFactorization fact;
    fact.path = FactorizePath::SpectralSpec;
    fact.T = multiply(multiply(s, asm_.Y), transpose(s));
    fact.W = multiply(multiply(s_inv_t, asm_.Jsym), s_inv);
    validate_factorization(b, fact, cfg);

    // Sylvester congruence: T = S Y S^T must carry the inertia of Y
    if (fact.inertia_T != asm_.inertia_Y) {
        throw InternalError("inertia of T disagrees with the closed-form inertia of Y");
    }
    return {b, fact};
}

namespace {

// Real similarity basis from the eigenvectors of a simple-spectrum matrix.
// Real eigenvalues contribute their (sign-fixed, unit) eigenvector; a complex
// pair a+ib with eigenvector x+iy contributes columns (y, x) so that
// B [y x] = [y x] [[a,-b],[b,a]].
struct RealEigenBasis {
    SpectrumSpec spec;
    DenseMatrix s;
};

RealEigenBasis build_real_eigen_basis(const DenseMatrix& b, const GeneralEigen& raw,
                                      const Config& cfg) {
    const std::size_t m = b.rows();
    RealEigenBasis out;
    out.s = DenseMatrix(m, m);
    std::size_t col = 0;

    for (std::size_t i = 0; i < m; ++i) {
        if (raw.wi[i] != 0.0) continue;
        std::vector<double> v(m);
        for (std::size_t r = 0; r < m; ++r) v[r] = raw.vectors(r, i);
        std::size_t imax = 0;
        for (std::size_t r = 1; r < m; ++r)
            if (std::fabs(v[r]) > std::fabs(v[imax])) imax = r;
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        const double sign = (v[imax] >= 0.0) ? 1.0 : -1.0;
        for (std::size_t r = 0; r < m; ++r) out.s(r, col) = v[r] * sign / norm;
        out.spec.real_blocks.push_back({raw.wr[i], 1});
        ++col;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!(raw.wi[i] > 0.0)) continue;
        std::vector<std::complex<double>> v(m);
        for (std::size_t r = 0; r < m; ++r)
            v[r] = {raw.vectors(r, i), raw.vectors(r, i + 1)};
        std::size_t imax = 0;
        for (std::size_t r = 1; r < m; ++r)
            if (std::abs(v[r]) > std::abs(v[imax])) imax = r;
        // rotate so the largest entry is real and positive, then unit-scale
        const std::complex<double> phase = std::conj(v[imax]) / std::abs(v[imax]);
        double norm = 0.0;
        for (auto& x : v) {
            x *= phase;
            norm += std::norm(x);
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < m; ++r) {
            out.s(r, col) = v[r].imag() / norm;     // Im part first
            out.s(r, col + 1) = v[r].real() / norm; // then Re part
        }
        out.spec.complex_blocks.push_back({raw.wr[i], raw.wi[i], 1});
        col += 2;
    }
    if (col != m) {
        throw ConvergenceFailure("eigenvector bookkeeping mismatch");
    }
    (void)cfg;
    return out;
}

void check_simple_spectrum(const DenseMatrix& b, const GeneralEigen& raw, const Config& cfg) {
    const std::size_t m = b.rows();
    const double gap_tol = cfg.gap_tol_rel * std::max(frobenius_norm(b), 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (raw.wi[i] == 0.0 && std::fabs(raw.wr[i]) < gap_tol) {
            throw SingularMatrix("eigenvalue too close to zero");
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            const double dist = std::hypot(raw.wr[i] - raw.wr[j], raw.wi[i] - raw.wi[j]);
            if (dist < gap_tol) {
                throw NearDefective("eigenvalue gap " + std::to_string(dist) +
                                    " below tolerance; use the spec path");
            }
        }
    }
}

} // namespace

SymFactorization factorize_distinct(const DenseMatrix& b, const Config& cfg) {
    if (!b.square()) throw DimensionMismatch("factorize_distinct needs a square matrix");
    const GeneralEigen raw = general_eigen(b, cfg);
    check_simple_spectrum(b, raw, cfg);
    const RealEigenBasis basis = build_real_eigen_basis(b, raw, cfg);

    auto [b_rebuilt, fact] = factorize_from_spec(basis.spec, basis.s, cfg);
    (void)b_rebuilt;
    fact.path = FactorizePath::DistinctEigen;
    validate_factorization(b, fact, cfg); // residual against the actual input
    return fact;
}

SymFactorization factorize_spd(const DenseMatrix& b, const Config& cfg) {
    if (!b.square()) throw DimensionMismatch("factorize_spd needs a square matrix");
    const std::size_t m = b.rows();

    DenseMatrix s(m, m);
    std::vector<double> lambda(m);
    if (symmetry_defect(b) <= cfg.sym_tol) {
        // symmetric input: the orthonormal eigenbasis handles repeated
        // eigenvalues as well
        const SymmetricEigen eig = symmetric_eigen(b, cfg);
        const double cut = cfg.zero_tol * std::max(frobenius_norm(b), 1.0);
        for (double v : eig.values) {
            if (std::fabs(v) <= cut) {
                throw SingularMatrix("input has a numerically zero eigenvalue");
            }
        }
        s = eig.vectors;
        lambda = eig.values;
    } else {
        const GeneralEigen raw = general_eigen(b, cfg);
        for (std::size_t i = 0; i < m; ++i) {
            const double mag = std::hypot(raw.wr[i], raw.wi[i]);
            if (std::fabs(raw.wi[i]) > cfg.pair_tol * (1.0 + mag)) {
                throw NotRealSpectrum("matrix has non-real eigenvalues");
            }
        }
        check_simple_spectrum(b, raw, cfg);
        const RealEigenBasis basis = build_real_eigen_basis(b, raw, cfg);
        s = basis.s;
        for (std::size_t i = 0; i < m; ++i) lambda[i] = basis.spec.real_blocks[i].lambda;
        if (condition_estimate(s, cfg.pivot_tol) > cfg.cond_cap) {
            throw NearDefective("eigenvector matrix is ill-conditioned");
        }
    }

    const DenseMatrix s_inv = invert(s, cfg.pivot_tol);
    DenseMatrix lam(m, m);
    for (std::size_t i = 0; i < m; ++i) lam(i, i) = lambda[i];

    SymFactorization fact;
    fact.path = FactorizePath::SPD;
    fact.T = multiply(s, transpose(s));
    fact.W = multiply(multiply(transpose(s_inv), lam), s_inv);
    validate_factorization(b, fact, cfg);
    if (fact.inertia_T != Inertia{static_cast<int>(m), 0, 0}) {
        throw InternalError("T = S S^T is not positive definite");
    }
    return fact;
}

double selfadjoint_similarity_check(const DenseMatrix& b, const SymFactorization& fact,
                                    const Config& cfg) {
    const int m = static_cast<int>(b.rows());
    if (fact.inertia_T != Inertia{m, 0, 0}) {
        throw NotSPD("similarity check requires a positive definite T");
    }
    const DenseMatrix root = spd_sqrt(fact.T, cfg);
    const DenseMatrix root_inv = invert(root, cfg.pivot_tol);
    return symmetry_defect(multiply(multiply(root_inv, b), root));
}

std::pair<std::vector<double>, std::vector<double>>
alternative_diagonal_split(const std::vector<double>& lambda,
                           const std::vector<int>& sign_first) {
    if (lambda.size() != sign_first.size()) {
        throw DimensionMismatch("one sign choice per diagonal entry required");
    }
    std::vector<double> d1(lambda.size()), d2(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] == 0.0) throw InvalidSpec("zero diagonal entry cannot be split");
        if (sign_first[i] != 1 && sign_first[i] != -1) {
            throw InvalidSplit("sign choice must be +1 or -1");
        }
        d1[i] = sign_first[i] * std::sqrt(std::fabs(lambda[i]));
        d2[i] = lambda[i] / d1[i];
        if (d1[i] * d2[i] * lambda[i] <= 0.0) {
            throw InvalidSplit("inconsistent signed split");
        }
    }
    return {d1, d2};
}

} // namespace symfact
