#pragma once

#include <cstdint>
#include <random>

#include "symfact/eigen.hpp"
#include "symfact/spectrum.hpp"

namespace symfact {

using Rng = std::mt19937_64;

/// Stateless mix of (seed, stream) into an independent generator seed, so
/// parallel sampling with per-index streams matches the serial order-free
/// census exactly.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

double gaussian(Rng& rng);

/// Orthogonal matrix from QR (modified Gram-Schmidt) of a Gaussian matrix,
/// with positive diagonal R for uniqueness.
DenseMatrix random_orthogonal(std::size_t m, Rng& rng);

/// Invertible S = Q1 * diag(d) * Q2 with log-uniform d in [1/spread, spread];
/// mild spread keeps the condition number well under the library cap.
DenseMatrix random_well_conditioned(std::size_t m, Rng& rng, double spread = 4.0);

DenseMatrix random_symmetric(std::size_t m, Rng& rng);

/// Symmetric matrix with exactly the requested inertia (z must be 0):
/// Q diag(signed magnitudes) Q^T with magnitudes in [0.5, 2].
DenseMatrix random_symmetric_with_inertia(const Inertia& target, Rng& rng);

/// Simple-spectrum spec with the given counts of complex pairs and of
/// positive/negative real eigenvalues, all separated by a safety gap.
SpectrumSpec random_simple_spectrum(int complex_pairs, int positive_reals,
                                    int negative_reals, Rng& rng);

/// All-complex-spectrum spec (s = 0) of even dimension m.
SpectrumSpec random_all_complex_spectrum(std::size_t m, Rng& rng);

} // namespace symfact
