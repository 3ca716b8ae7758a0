#include "symfact/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace symfact {

namespace {

DenseMatrix symmetric_inverse(const DenseMatrix& t, const Config& cfg) {
    if (symmetry_defect(t) > cfg.sym_tol) {
        throw NotSymmetric("pencil factor T is not symmetric");
    }
    DenseMatrix inv = invert(t, cfg.pivot_tol);
    // exact symmetrization so pencil matrices have zero symmetry defect
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = i + 1; j < inv.cols(); ++j) {
            const double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    return inv;
}

DenseMatrix pencil_at(PencilKind kind, double param, const DenseMatrix& w,
                      const DenseMatrix& t_inv) {
    const double sign = (kind == PencilKind::V) ? 1.0 : -1.0;
    DenseMatrix out = w;
    const double a = param;
    const double b = (1.0 - param) * sign;
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a * out.entries()[i] + b * t_inv.entries()[i];
    }
    return out;
}

std::vector<double> ascending_eigs(const DenseMatrix& a, const Config& cfg) {
    std::vector<double> vals = symmetric_eigen(a, cfg).values; // descending
    std::reverse(vals.begin(), vals.end());
    return vals;
}

std::vector<double> uniform_grid(int cells) {
    std::vector<double> grid(static_cast<std::size_t>(cells) + 1);
    for (int i = 0; i <= cells; ++i) grid[static_cast<std::size_t>(i)] = double(i) / cells;
    return grid;
}

} // namespace

DenseMatrix pencil_matrix(PencilKind kind, double param, const DenseMatrix& t,
                          const DenseMatrix& w, const Config& cfg) {
    if (symmetry_defect(w) > cfg.sym_tol) {
        throw NotSymmetric("pencil factor W is not symmetric");
    }
    return pencil_at(kind, param, w, symmetric_inverse(t, cfg));
}

std::vector<std::vector<double>> eval_grid_serial(PencilKind kind, const DenseMatrix& t,
                                                  const DenseMatrix& w,
                                                  const std::vector<double>& grid,
                                                  const Config& cfg) {
    const DenseMatrix t_inv = symmetric_inverse(t, cfg);
    std::vector<std::vector<double>> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out[i] = ascending_eigs(pencil_at(kind, grid[i], w, t_inv), cfg);
    }
    return out;
}

std::vector<std::vector<double>> eval_grid(PencilKind kind, const DenseMatrix& t,
                                           const DenseMatrix& w,
                                           const std::vector<double>& grid,
                                           const Config& cfg) {
    const DenseMatrix t_inv = symmetric_inverse(t, cfg);
    std::vector<std::vector<double>> out(grid.size());
    const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out[idx] = ascending_eigs(pencil_at(kind, grid[idx], w, t_inv), cfg);
    }
    return out;
}

PencilScan scan(PencilKind kind, const DenseMatrix& t, const DenseMatrix& w, int grid_size,
                const Config& cfg) {
    if (grid_size < 8) throw InvalidSpec("pencil grid size must be >= 8");
    const DenseMatrix t_inv = symmetric_inverse(t, cfg);
    if (symmetry_defect(w) > cfg.sym_tol) {
        throw NotSymmetric("pencil factor W is not symmetric");
    }
    const std::size_t m = t.rows();

    // slope bound: d/dparam of the pencil is W -+ T^{-1}; sorted eigenvalue
    // trajectories are Lipschitz with this constant (Weyl)
    const DenseMatrix slope = (kind == PencilKind::V) ? subtract(w, t_inv) : add(w, t_inv);
    const double lipschitz = std::max(frobenius_norm(slope), 1e-300);

    PencilScan result;
    result.kind = kind;

    // adaptive resolution: refine while a same-sign trajectory could have
    // dipped through zero inside a cell
    int cells = grid_size;
    std::vector<std::vector<double>> vals;
    while (true) {
        result.grid = uniform_grid(cells);
        vals = eval_grid(kind, t, w, result.grid, cfg);
        const double reach = 0.5 * lipschitz / cells;
        bool suspicious = false;
        for (std::size_t c = 0; c + 1 < result.grid.size() && !suspicious; ++c) {
            for (std::size_t k = 0; k < m; ++k) {
                const double a = vals[c][k];
                const double b = vals[c + 1][k];
                if (a * b > 0.0 && std::min(std::fabs(a), std::fabs(b)) < reach) {
                    suspicious = true;
                    break;
                }
            }
        }
        if (!suspicious || cells >= cfg.max_grid_size) break;
        cells *= 2;
    }

    // bisection refinement of every sign change, per trajectory index
    const double refine_abs = cfg.refine_tol * std::max(frobenius_norm(w) + frobenius_norm(t_inv), 1.0);
    std::vector<double> crossings;
    for (std::size_t c = 0; c + 1 < result.grid.size(); ++c) {
        for (std::size_t k = 0; k < m; ++k) {
            double fa = vals[c][k];
            double fb = vals[c + 1][k];
            if (fa == 0.0) fa = -fb; // grid point exactly singular: count once
            if (!(fa * fb < 0.0)) continue;
            double lo = result.grid[c];
            double hi = result.grid[c + 1];
            double mid = 0.5 * (lo + hi);
            bool converged = false;
            for (int it = 0; it < 200; ++it) {
                mid = 0.5 * (lo + hi);
                const double fm = ascending_eigs(pencil_at(kind, mid, w, t_inv), cfg)[k];
                if (std::fabs(fm) <= refine_abs || hi - lo <= 1e-15) {
                    converged = true;
                    break;
                }
                if ((fa < 0.0) == (fm < 0.0)) {
                    lo = mid;
                    fa = fm;
                } else {
                    hi = mid;
                }
            }
            if (!converged) {
                throw RefineFailure("bisection stalled in [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
            }
            crossings.push_back(mid);
        }
    }

    // detect zero touches that never produced a sign change (reported, not
    // counted: the corollaries only count crossings)
    {
        const double touch_tol = 1e-10 * std::max(frobenius_norm(w) + frobenius_norm(t_inv), 1.0);
        for (std::size_t c = 0; c < result.grid.size(); ++c) {
            for (std::size_t k = 0; k < m; ++k) {
                if (std::fabs(vals[c][k]) >= touch_tol) continue;
                const double param = result.grid[c];
                const bool near_crossing =
                    std::any_of(crossings.begin(), crossings.end(), [&](double x) {
                        return std::fabs(x - param) < 2.0 / cells;
                    });
                if (!near_crossing && param > 0.0 && param < 1.0) {
                    result.touch_params.push_back(param);
                }
            }
        }
    }

    // cluster coincident parameters into multiplicities
    std::sort(crossings.begin(), crossings.end());
    std::size_t i = 0;
    while (i < crossings.size()) {
        std::size_t j = i + 1;
        double sum = crossings[i];
        while (j < crossings.size() && crossings[j] - crossings[j - 1] <= cfg.cluster_tol) {
            sum += crossings[j];
            ++j;
        }
        SingularPoint point;
        point.param = sum / static_cast<double>(j - i);
        point.multiplicity = static_cast<int>(j - i);
        point.mapped_eigenvalue = (kind == PencilKind::V)
                                      ? (point.param - 1.0) / point.param
                                      : (1.0 - point.param) / point.param;
        result.singular_points.push_back(point);
        i = j;
    }

    int total = 0;
    for (const auto& sp : result.singular_points) total += sp.multiplicity;
    if (kind == PencilKind::V)
        result.negative_found = total;
    else
        result.positive_found = total;
    result.trajectories = std::move(vals);
    return result;
}

CountReport verify_counts(const PencilScan& scan_v, const PencilScan& scan_u,
                          const Inertia& inertia_t, const Inertia& inertia_w,
                          const DenseMatrix& t, const DenseMatrix& w, const Config& cfg) {
    CountReport report;
    report.required_negative = std::abs(inertia_t.p - inertia_w.p);
    report.required_positive = std::abs(inertia_t.n - inertia_w.p);
    report.found_negative = scan_v.negative_found;
    report.found_positive = scan_u.positive_found;

    const DenseMatrix b = multiply(t, w);
    const EigenvalueSet eigs = general_eigenvalues(b, cfg);
    auto check_mapped = [&](const PencilScan& s) {
        for (const auto& sp : s.singular_points) {
            double best = std::numeric_limits<double>::infinity();
            for (double lambda : eigs.real_eigenvalues) {
                best = std::min(best, std::fabs(lambda - sp.mapped_eigenvalue));
            }
            report.worst_eigenvalue_mismatch = std::max(report.worst_eigenvalue_mismatch, best);
            if (best > 1e-6 * std::max(1.0, std::fabs(sp.mapped_eigenvalue))) {
                throw CountMismatch("mapped eigenvalue " +
                                    std::to_string(sp.mapped_eigenvalue) +
                                    " not found in the spectrum of T*W");
            }
        }
    };
    check_mapped(scan_v);
    check_mapped(scan_u);

    report.counts_ok = report.found_negative >= report.required_negative &&
                       report.found_positive >= report.required_positive;
    if (!report.counts_ok) {
        throw CountMismatch("scan found (" + std::to_string(report.found_negative) + " neg, " +
                            std::to_string(report.found_positive) + " pos), required (" +
                            std::to_string(report.required_negative) + ", " +
                            std::to_string(report.required_positive) + ")");
    }
    return report;
}

int eigenvector_multiplicity_check(const DenseMatrix& t, const DenseMatrix& w,
                                   const PencilScan& scan_result, const SingularPoint& point,
                                   const Config& cfg) {
    const DenseMatrix t_inv = symmetric_inverse(t, cfg);
    const DenseMatrix pencil = pencil_at(scan_result.kind, point.param, w, t_inv);
    const SymmetricEigen eig = symmetric_eigen(pencil, cfg);
    const double null_tol = 1e-6 * std::max(frobenius_norm(pencil), 1.0);

    const DenseMatrix b = multiply(t, w);
    const double bnorm = std::max(frobenius_norm(b), 1.0);
    const std::size_t m = t.rows();
    int r = 0;
    for (std::size_t k = 0; k < m; ++k) {
        if (std::fabs(eig.values[k]) > null_tol) continue;
        ++r;
        // kernel vector must be an eigenvector of B for the mapped eigenvalue
        std::vector<double> residual(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            double acc = -point.mapped_eigenvalue * eig.vectors(i, k);
            for (std::size_t j = 0; j < m; ++j) acc += b(i, j) * eig.vectors(j, k);
            residual[i] = acc;
        }
        double res = 0.0;
        for (double v : residual) res += v * v;
        if (std::sqrt(res) > 1e-6 * bnorm) {
            throw KernelMismatch("pencil kernel vector is not an eigenvector of T*W");
        }
    }
    return r;
}

} // namespace symfact
