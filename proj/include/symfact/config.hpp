#pragma once

#include <cstdint>

namespace symfact {

/// Tunable tolerances and limits shared across the library.
/// Defaults are sized for dense matrices up to the size cap.
struct Config {
    double sym_tol = 1e-10;     // symmetry defect accepted as "symmetric"
    double zero_tol = 1e-9;     // relative cutoff for zero eigenvalues in inertia
    double pair_tol = 1e-8;     // |Im| below pair_tol*(1+|lambda|) counts as real
    double pivot_tol = 1e-12;   // relative pivot cutoff in elimination
    int max_sweeps = 100;       // Jacobi sweep limit

    double gap_tol_rel = 1e-6;  // minimum relative eigenvalue gap for the distinct path
    double cond_cap = 1e6;      // condition estimate cap for user-supplied S
    int size_cap = 64;          // general eigensolver dimension cap

    int grid_size = 256;        // initial pencil grid resolution
    int max_grid_size = 16384;  // adaptive refinement ceiling (2^14)
    double refine_tol = 1e-12;  // relative |eigenvalue| target in bisection
    double cluster_tol = 1e-8;  // merge radius for coincident singular parameters

    double null_space_tol = 1e-8;   // relative singular-value cut for kernel rank
    double singular_det_tol = 1e-10; // census rejection threshold factor

    std::uint64_t seed = 0;
    int samples = 1000;
};

} // namespace symfact
