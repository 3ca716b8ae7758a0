#pragma once

#include <string>
#include <vector>

#include "symfact/factorize.hpp"

namespace symfact {

struct SpectrumClassification {
    int s = 0;         // real eigenvalue count
    int neg_real = 0;
    int pos_real = 0;
    int nonreal = 0;   // 2 * complex pairs
};

struct CertificateCheck {
    std::string name;
    bool applicable = true;
    bool pass = false;
    std::string details;
};

/// Machine-checkable record of every inertia claim a factorization must
/// satisfy. Bounds are halves of integers and stored exactly as numerators
/// over 2.
struct Certificate {
    int m = 0;
    int s = 0;
    int nonreal_count = 0;
    Inertia inertia_T;
    Inertia inertia_W;
    int twice_lower = 0; // m - s
    int twice_upper = 0; // m + s
    std::vector<CertificateCheck> checks;
    double reconstruction_residual = 0.0;
    double symmetry_residual_T = 0.0;
    double symmetry_residual_W = 0.0;
    bool indeterminate = false;

    bool overall_pass() const;
};

/// Real/sign partition of an invertible spectrum; throws SingularMatrix on a
/// zero real eigenvalue.
SpectrumClassification classify_spectrum(const EigenvalueSet& eigs);

/// Evaluates the inertia bounds for T and W, the negative/positive real
/// eigenvalue count lower bounds, the differing-inertia lemma, and the
/// all-non-real special case. Marks the certificate indeterminate when an
/// eigenvalue sits within a decade of the real-coercion boundary.
Certificate certify(const DenseMatrix& b, const SymFactorization& fact,
                    const Config& cfg = {});

} // namespace symfact
