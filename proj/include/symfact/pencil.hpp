#pragma once

#include <vector>

#include "symfact/eigen.hpp"

namespace symfact {

enum class PencilKind { V, U };

struct SingularPoint {
    double param = 0.0;            // refined parameter in (0, 1)
    int multiplicity = 1;          // trajectories crossing zero here
    double mapped_eigenvalue = 0.0; // eigenvalue of B = T W it encodes
};

/// Eigenvalue trajectories of the symmetric pencil over a parameter grid,
/// with refined singular parameters and the eigenvalues of B they map to.
/// V-scans locate negative real eigenvalues, U-scans positive ones.
struct PencilScan {
    PencilKind kind = PencilKind::V;
    std::vector<double> grid;
    std::vector<std::vector<double>> trajectories; // per grid point, ascending
    std::vector<SingularPoint> singular_points;
    std::vector<double> touch_params; // zero touches without a sign change
    int negative_found = 0;
    int positive_found = 0;
};

struct CountReport {
    int required_negative = 0; // |p - p_hat|
    int required_positive = 0; // |n - p_hat|
    int found_negative = 0;
    int found_positive = 0;
    bool counts_ok = false;
    double worst_eigenvalue_mismatch = 0.0;
};

/// theta*W + (1-theta)*T^{-1} for kind V, phi*W + (1-phi)*(-T^{-1}) for kind U.
DenseMatrix pencil_matrix(PencilKind kind, double param, const DenseMatrix& t,
                          const DenseMatrix& w, const Config& cfg = {});

/// Evaluates sorted pencil eigenvalues at each grid parameter.
std::vector<std::vector<double>> eval_grid(PencilKind kind, const DenseMatrix& t,
                                           const DenseMatrix& w,
                                           const std::vector<double>& grid,
                                           const Config& cfg = {});

/// Serial reference for eval_grid; must produce identical output.
std::vector<std::vector<double>> eval_grid_serial(PencilKind kind, const DenseMatrix& t,
                                                  const DenseMatrix& w,
                                                  const std::vector<double>& grid,
                                                  const Config& cfg = {});

/// Grid scan with sign-change bisection, adaptive grid doubling, clustering
/// of coincident crossings, and parameter-to-eigenvalue mapping.
PencilScan scan(PencilKind kind, const DenseMatrix& t, const DenseMatrix& w,
                int grid_size, const Config& cfg = {});

/// Corollary-level count check: a V/U scan pair must find at least
/// |p - p_hat| negative and |n - p_hat| positive eigenvalues of T W, and
/// every mapped eigenvalue must appear in the spectrum of T W.
CountReport verify_counts(const PencilScan& scan_v, const PencilScan& scan_u,
                          const Inertia& inertia_t, const Inertia& inertia_w,
                          const DenseMatrix& t, const DenseMatrix& w,
                          const Config& cfg = {});

/// Numerical nullity of the pencil at a refined singular point, with the
/// kernel vectors verified as eigenvectors of T W for the mapped eigenvalue.
int eigenvector_multiplicity_check(const DenseMatrix& t, const DenseMatrix& w,
                                   const PencilScan& scan_result,
                                   const SingularPoint& point, const Config& cfg = {});

} // namespace symfact
