#include "symfact/certify.hpp"

#include <cmath>

namespace symfact {

bool Certificate::overall_pass() const {
    if (indeterminate) return false;
    for (const auto& c : checks) {
        if (c.applicable && !c.pass) return false;
    }
    return true;
}

SpectrumClassification classify_spectrum(const EigenvalueSet& eigs) {
    SpectrumClassification out;
    out.s = static_cast<int>(eigs.real_eigenvalues.size());
    out.nonreal = 2 * static_cast<int>(eigs.complex_pairs.size());
    for (double lambda : eigs.real_eigenvalues) {
        if (lambda == 0.0) {
            throw SingularMatrix("zero eigenvalue: matrix is not invertible");
        }
        if (lambda > 0.0)
            ++out.pos_real;
        else
            ++out.neg_real;
    }
    return out;
}

Certificate certify(const DenseMatrix& b, const SymFactorization& fact, const Config& cfg) {
    if (!b.square()) throw DimensionMismatch("certify needs a square matrix");
    const int m = static_cast<int>(b.rows());

    Certificate cert;
    cert.m = m;
    cert.inertia_T = fact.inertia_T;
    cert.inertia_W = fact.inertia_W;
    cert.symmetry_residual_T = symmetry_defect(fact.T);
    cert.symmetry_residual_W = symmetry_defect(fact.W);
    const double bnorm = std::max(frobenius_norm(b), 1e-300);
    cert.reconstruction_residual =
        frobenius_norm(subtract(b, multiply(fact.T, fact.W))) / bnorm;

    if (cert.symmetry_residual_T > 1e-9 || cert.symmetry_residual_W > 1e-9 ||
        cert.reconstruction_residual > 1e-8) {
        throw InvalidFactorization("candidate factorization violates its residual contract");
    }

    const GeneralEigen raw = general_eigen(b, cfg);
    // surface borderline real/non-real classifications instead of deciding
    for (std::size_t i = 0; i < raw.wr.size(); ++i) {
        const double im = std::fabs(raw.wi[i]);
        if (im == 0.0) continue;
        const double boundary = cfg.pair_tol * (1.0 + std::hypot(raw.wr[i], raw.wi[i]));
        if (im > boundary / 10.0 && im < boundary * 10.0) {
            cert.indeterminate = true;
        }
    }

    const EigenvalueSet eigs = general_eigenvalues(b, cfg);
    const SpectrumClassification cls = classify_spectrum(eigs);
    cert.s = cls.s;
    cert.nonreal_count = cls.nonreal;
    cert.twice_lower = m - cls.s;
    cert.twice_upper = m + cls.s;

    const int p = fact.inertia_T.p;
    const int p_hat = fact.inertia_W.p;
    const int n = fact.inertia_T.n;

    auto add = [&](const std::string& name, bool applicable, bool pass,
                   const std::string& details) {
        cert.checks.push_back({name, applicable, pass, details});
    };

    const bool prop_t = (2 * p >= cert.twice_lower) && (2 * p <= cert.twice_upper);
    add("prop_T", true, prop_t,
        "2p=" + std::to_string(2 * p) + " in [" + std::to_string(cert.twice_lower) + ", " +
            std::to_string(cert.twice_upper) + "]");

    const bool prop_w = (2 * p_hat >= cert.twice_lower) && (2 * p_hat <= cert.twice_upper);
    add("prop_W", true, prop_w,
        "2p_hat=" + std::to_string(2 * p_hat) + " in [" + std::to_string(cert.twice_lower) +
            ", " + std::to_string(cert.twice_upper) + "]");

    const int required_neg = std::abs(p - p_hat);
    add("cor_neg", true, cls.neg_real >= required_neg,
        std::to_string(cls.neg_real) + " negative real eigenvalues, required >= " +
            std::to_string(required_neg));

    const int required_pos = std::abs(n - p_hat);
    add("cor_pos", true, cls.pos_real >= required_pos,
        std::to_string(cls.pos_real) + " positive real eigenvalues, required >= " +
            std::to_string(required_pos));

    const bool inertias_differ = fact.inertia_T != fact.inertia_W;
    add("lemma1", inertias_differ, !inertias_differ || cls.neg_real >= 1,
        inertias_differ ? "differing inertias require a negative real eigenvalue"
                        : "inertias equal; nothing to check");

    const bool maincor_applicable = (cls.s == 0);
    const Inertia half{m / 2, m / 2, 0};
    add("maincor", maincor_applicable,
        !maincor_applicable || (fact.inertia_T == half && fact.inertia_W == half),
        maincor_applicable ? "all eigenvalues non-real: both inertias must be (m/2, m/2, 0)"
                           : "matrix has real eigenvalues; not applicable");

    return cert;
}

} // namespace symfact
