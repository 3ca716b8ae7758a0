#pragma once

#include <utility>
#include <vector>

#include "symfact/eigen.hpp"

namespace symfact {

struct RealBlock {
    double lambda = 0.0;
    int ell = 1;
};

struct ComplexBlock {
    double a = 0.0;
    double b = 1.0; // imaginary part, > 0
    int ell = 1;    // chain length; block dimension is 2*ell
};

/// Declarative description of a real Jordan structure. Real blocks must have
/// a nonzero eigenvalue (the factorised matrix is required to be invertible).
struct SpectrumSpec {
    std::vector<RealBlock> real_blocks;
    std::vector<ComplexBlock> complex_blocks;

    std::size_t dimension() const;
    void validate() const; // throws InvalidSpec
};

/// Block-diagonal real Jordan form J with its symmetric factor pair:
/// J = Y * Jsym, Y and Jsym symmetric and block-aligned with J.
struct JordanAssembly {
    DenseMatrix J;
    DenseMatrix Y;
    DenseMatrix Jsym;
    Inertia inertia_Y;              // by formula, block-wise
    bool inertia_Jsym_defined = false;
    Inertia inertia_Jsym;           // computed numerically
};

/// ell x ell upper bidiagonal block: lambda on the diagonal, 1 above it.
DenseMatrix jordan_block_real(double lambda, int ell);

/// 2ell x 2ell real Jordan block for the pair a +- ib: 2x2 rotation-scaled
/// blocks on the diagonal, 2x2 identities on the block superdiagonal.
DenseMatrix jordan_block_complex(double a, double b, int ell);

/// k x k anti-diagonal permutation matrix.
DenseMatrix exchange_matrix(std::size_t k);

/// Inertia of exchange_matrix(k) in closed form: (ceil(k/2), floor(k/2), 0).
Inertia exchange_inertia(std::size_t k);

/// Splits a single real Jordan block into its symmetric factors
/// (exchange matrix, row-reversed block). Throws NotJordanBlock when the
/// row reversal is not symmetric.
std::pair<DenseMatrix, DenseMatrix> symmetric_block_factors(const DenseMatrix& block);

JordanAssembly assemble(const SpectrumSpec& spec, const Config& cfg = {});

/// Closed-form inertia of Jsym when all blocks are real: a block contributes
/// the exchange inertia when lambda > 0 and its swap when lambda < 0.
Inertia jsym_inertia_real_spectrum(const SpectrumSpec& spec);

} // namespace symfact
