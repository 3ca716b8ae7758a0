#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symfact/spectrum.hpp"

namespace symfact {

enum class FactorizePath { SpectralSpec, DistinctEigen, SPD };

std::string to_string(FactorizePath path);

/// A validated symmetric factor pair B = T * W.
struct SymFactorization {
    DenseMatrix T;
    DenseMatrix W;
    Inertia inertia_T;
    Inertia inertia_W;
    double reconstruction_residual = 0.0;      // ||B - TW||_F / ||B||_F
    std::pair<double, double> symmetry_residuals; // defects of T and W
    FactorizePath path = FactorizePath::SpectralSpec;
};

/// Builds B = S J S^{-1} together with T = S Y S^T and W = S^{-T} Jsym S^{-1}.
/// inertia_T is guaranteed to match the closed-form inertia of Y (congruence).
std::pair<DenseMatrix, SymFactorization> factorize_from_spec(const SpectrumSpec& spec,
                                                             const DenseMatrix& s,
                                                             const Config& cfg = {});

/// Factorization through the eigendecomposition of B; requires all
/// eigenvalues simple. Throws NearDefective when the spectrum is clustered.
SymFactorization factorize_distinct(const DenseMatrix& b, const Config& cfg = {});

/// Example-1 style factorization for matrices diagonalisable over the reals:
/// T = S S^T (positive definite), W = S^{-T} diag(eigenvalues) S^{-1}.
SymFactorization factorize_spd(const DenseMatrix& b, const Config& cfg = {});

/// Symmetry defect of T^{-1/2} B T^{1/2}; small for valid SPD factorizations
/// since B is then self-adjoint in the T^{-1} inner product.
double selfadjoint_similarity_check(const DenseMatrix& b, const SymFactorization& fact,
                                    const Config& cfg = {});

/// Splits diagonal eigenvalues lambda_i into signed pairs (d1_i, d2_i) with
/// d1_i * d2_i = lambda_i; sign_first chooses the sign of d1_i (+1 or -1).
std::pair<std::vector<double>, std::vector<double>>
alternative_diagonal_split(const std::vector<double>& lambda,
                           const std::vector<int>& sign_first);

} // namespace symfact
