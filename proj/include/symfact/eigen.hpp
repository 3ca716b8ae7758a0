#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "symfact/config.hpp"
#include "symfact/matrix.hpp"

namespace symfact {

/// Eigenvalue sign counts (positive, negative, zero) of a symmetric matrix.
struct Inertia {
    int p = 0;
    int n = 0;
    int z = 0;

    auto operator<=>(const Inertia&) const = default;
};

/// Result of a symmetric eigendecomposition A = Q diag(values) Q^T.
/// values are sorted descending; vectors holds eigenvectors as columns.
struct SymmetricEigen {
    std::vector<double> values;
    DenseMatrix vectors;
};

/// Real/non-real split of a general real spectrum. Each complex pair is
/// stored once with positive imaginary part; the conjugate is implicit.
struct EigenvalueSet {
    std::vector<double> real_eigenvalues;
    std::vector<std::pair<double, double>> complex_pairs; // (a, b) with b > 0

    std::size_t total() const { return real_eigenvalues.size() + 2 * complex_pairs.size(); }
};

/// Raw output of the nonsymmetric eigensolver, in deflation order.
/// For a complex pair at indices k, k+1: wi[k] > 0, wi[k+1] < 0, and the
/// eigenvector of wr[k] + i*wi[k] is vectors[:,k] + i*vectors[:,k+1].
struct GeneralEigen {
    std::vector<double> wr;
    std::vector<double> wi;
    DenseMatrix vectors;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
/// Throws NotSymmetric if symmetry_defect exceeds cfg.sym_tol and
/// ConvergenceFailure if the off-diagonal mass survives cfg.max_sweeps.
SymmetricEigen symmetric_eigen(const DenseMatrix& a, const Config& cfg = {});

Inertia inertia(const DenseMatrix& a, const Config& cfg = {});

/// Hessenberg reduction + shifted QR (with eigenvectors). Dimension capped
/// at cfg.size_cap.
GeneralEigen general_eigen(const DenseMatrix& a, const Config& cfg = {});

/// Classified spectrum: near-real eigenvalues coerced to real, conjugate
/// pairs stored once. Throws ConvergenceFailure on unpaired complex values.
EigenvalueSet general_eigenvalues(const DenseMatrix& a, const Config& cfg = {});

/// Principal square root of a symmetric positive definite matrix.
DenseMatrix spd_sqrt(const DenseMatrix& a, const Config& cfg = {});

} // namespace symfact
