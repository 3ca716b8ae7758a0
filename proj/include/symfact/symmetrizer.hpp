#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symfact/eigen.hpp"

namespace symfact {

/// Orthonormal basis (Frobenius inner product) of the space of symmetric T
/// with B T = T B^T, i.e. the symmetrizers of B.
struct SymmetrizerBasis {
    std::size_t dimension_m = 0;
    std::vector<DenseMatrix> basis;
    std::size_t space_dim = 0;
};

/// Histogram of inertias observed over random invertible members of a
/// symmetrizer space.
struct InertiaCensus {
    std::size_t samples = 0;
    std::map<std::tuple<int, int, int>, std::size_t> observed;
    std::size_t singular_rejections = 0;
};

/// Report of the observed census against the two-sided inertia bound
/// (m - s)/2 <= p <= (m + s)/2 implied by the non-real eigenvalue count.
struct CensusBoundsReport {
    int s = 0;                 // real eigenvalue count of B
    int twice_lower = 0;       // 2 * lower bound = m - s
    int twice_upper = 0;       // 2 * upper bound = m + s
    int observed_min_p = 0;
    int observed_max_p = 0;
    bool all_within_bounds = false;
};

/// Null-space computation for the linear operator T -> B T - T B^T over
/// symmetric T, via the Gram matrix of its coordinate representation.
SymmetrizerBasis symmetrizer_basis(const DenseMatrix& b, const Config& cfg = {});

/// Gaussian sampling of the basis span; rejects near-singular draws and
/// verifies on every accepted T that W = T^{-1} B is symmetric (the
/// defining equivalence). Deterministic per (seed, samples).
InertiaCensus sample_census(const SymmetrizerBasis& basis, const DenseMatrix& b,
                            std::size_t samples, std::uint64_t seed,
                            const Config& cfg = {});

/// Serial reference for sample_census; must produce identical output.
InertiaCensus sample_census_serial(const SymmetrizerBasis& basis, const DenseMatrix& b,
                                   std::size_t samples, std::uint64_t seed,
                                   const Config& cfg = {});

CensusBoundsReport census_vs_bounds(const InertiaCensus& census, const EigenvalueSet& eigs);

/// Relative Frobenius distance from t to the span of the basis.
double projection_residual(const SymmetrizerBasis& basis, const DenseMatrix& t);

} // namespace symfact
