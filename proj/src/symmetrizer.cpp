#include "symfact/symmetrizer.hpp"

#include <cmath>

#include "symfact/rng.hpp"

namespace symfact {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

// Isometric coordinates for symmetric matrices: diagonal entries map to
// themselves, each off-diagonal pair (i<j) to sqrt(2) * a_ij, so that the
// coordinate 2-norm equals the Frobenius norm.
std::size_t sym_coord_count(std::size_t m) { return m * (m + 1) / 2; }

DenseMatrix coords_to_sym(const std::vector<double>& c, std::size_t m) {
    DenseMatrix t(m, m);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        t(i, i) = c[idx++];
        for (std::size_t j = i + 1; j < m; ++j) {
            const double v = c[idx++] * kSqrtHalf;
            t(i, j) = v;
            t(j, i) = v;
        }
    }
    return t;
}

std::vector<double> sym_to_coords(const DenseMatrix& t) {
    const std::size_t m = t.rows();
    std::vector<double> c(sym_coord_count(m));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        c[idx++] = t(i, i);
        for (std::size_t j = i + 1; j < m; ++j) c[idx++] = t(i, j) / kSqrtHalf;
    }
    return c;
}

} // namespace

SymmetrizerBasis symmetrizer_basis(const DenseMatrix& b, const Config& cfg) {
    if (!b.square()) throw DimensionMismatch("symmetrizer_basis needs a square matrix");
    const std::size_t m = b.rows();
    if (m > 16) throw CapExceeded("symmetrizer space limited to m <= 16");
    const std::size_t q = sym_coord_count(m);
    const DenseMatrix bt = transpose(b);

    // columns of op: vec(B*Sym_k - Sym_k*B^T) for each coordinate direction
    DenseMatrix op(m * m, q);
    std::vector<double> unit(q, 0.0);
    for (std::size_t k = 0; k < q; ++k) {
        unit[k] = 1.0;
        const DenseMatrix sym = coords_to_sym(unit, m);
        unit[k] = 0.0;
        const DenseMatrix r = subtract(multiply(b, sym), multiply(sym, bt));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) op(i * m + j, k) = r(i, j);
    }

    // kernel of op from the eigendecomposition of its Gram matrix
    const DenseMatrix gram = multiply(transpose(op), op);
    const SymmetricEigen eig = symmetric_eigen(gram, cfg);
    const double lambda_max = eig.values.empty() ? 0.0 : std::max(eig.values.front(), 0.0);
    const double cut = cfg.null_space_tol * cfg.null_space_tol * std::max(lambda_max, 1e-300);

    SymmetrizerBasis out;
    out.dimension_m = m;
    for (std::size_t k = 0; k < q; ++k) {
        if (eig.values[k] > cut && lambda_max > 0.0) continue;
        std::vector<double> c(q);
        for (std::size_t i = 0; i < q; ++i) c[i] = eig.vectors(i, k);
        out.basis.push_back(coords_to_sym(c, m));
    }
    out.space_dim = out.basis.size();
    if (out.space_dim == 0) {
        throw InternalError("symmetrizer space is numerically empty");
    }

    const double bnorm = frobenius_norm(b);
    for (const auto& t : out.basis) {
        const double res = frobenius_norm(subtract(multiply(b, t), multiply(t, bt)));
        if (res > 1e-8 * bnorm * frobenius_norm(t)) {
            throw InternalError("kernel basis element fails the symmetrizer equation");
        }
    }
    return out;
}

namespace {

struct SampleOutcome {
    bool rejected = false;
    Inertia inertia_value;
    bool inconsistent = false;
};

SampleOutcome evaluate_sample(const SymmetrizerBasis& basis, const DenseMatrix& b,
                              std::uint64_t sample_seed, const Config& cfg) {
    const std::size_t m = basis.dimension_m;
    Rng rng(sample_seed);
    DenseMatrix t(m, m);
    for (const auto& elem : basis.basis) {
        const double c = gaussian(rng);
        for (std::size_t i = 0; i < t.entries().size(); ++i)
            t.entries()[i] += c * elem.entries()[i];
    }

    SampleOutcome out;
    const double det = determinant(t);
    const double scale = frobenius_norm(t) / std::sqrt(static_cast<double>(m));
    if (std::fabs(det) <= cfg.singular_det_tol * std::pow(scale, static_cast<double>(m))) {
        out.rejected = true;
        return out;
    }
    out.inertia_value = inertia(t, cfg);

    // oracle self-check: W = T^{-1} B must be symmetric
    const DenseMatrix w = multiply(invert(t, cfg.pivot_tol), b);
    if (symmetry_defect(w) > 1e-7) out.inconsistent = true;
    return out;
}

InertiaCensus run_census(const SymmetrizerBasis& basis, const DenseMatrix& b,
                         std::size_t samples, std::uint64_t seed, const Config& cfg,
                         bool parallel) {
    if (samples < 1) throw InvalidSpec("census needs at least one sample");
    std::vector<SampleOutcome> outcomes(samples);

    if (parallel) {
        const auto count = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            outcomes[static_cast<std::size_t>(i)] =
                evaluate_sample(basis, b, mix_seed(seed, static_cast<std::uint64_t>(i)), cfg);
        }
    } else {
        for (std::size_t i = 0; i < samples; ++i) {
            outcomes[i] = evaluate_sample(basis, b, mix_seed(seed, i), cfg);
        }
    }

    InertiaCensus census;
    census.samples = samples;
    for (const auto& o : outcomes) {
        if (o.inconsistent) {
            throw OracleInconsistency("sampled T produced a non-symmetric W = T^{-1} B");
        }
        if (o.rejected) {
            ++census.singular_rejections;
        } else {
            ++census.observed[{o.inertia_value.p, o.inertia_value.n, o.inertia_value.z}];
        }
    }
    return census;
}

} // namespace

InertiaCensus sample_census(const SymmetrizerBasis& basis, const DenseMatrix& b,
                            std::size_t samples, std::uint64_t seed, const Config& cfg) {
    return run_census(basis, b, samples, seed, cfg, true);
}

InertiaCensus sample_census_serial(const SymmetrizerBasis& basis, const DenseMatrix& b,
                                   std::size_t samples, std::uint64_t seed,
                                   const Config& cfg) {
    return run_census(basis, b, samples, seed, cfg, false);
}

CensusBoundsReport census_vs_bounds(const InertiaCensus& census, const EigenvalueSet& eigs) {
    if (census.observed.empty()) {
        throw InvalidSpec("census has no accepted samples");
    }
    CensusBoundsReport report;
    const int m = static_cast<int>(eigs.total());
    report.s = static_cast<int>(eigs.real_eigenvalues.size());
    report.twice_lower = m - report.s;
    report.twice_upper = m + report.s;
    report.observed_min_p = m + 1;
    report.observed_max_p = -1;
    report.all_within_bounds = true;
    for (const auto& [key, count] : census.observed) {
        const auto [p, n, z] = key;
        (void)n;
        if (z != 0) {
            throw BoundViolation("census recorded a singular inertia class");
        }
        report.observed_min_p = std::min(report.observed_min_p, p);
        report.observed_max_p = std::max(report.observed_max_p, p);
        if (2 * p < report.twice_lower || 2 * p > report.twice_upper) {
            report.all_within_bounds = false;
            throw BoundViolation("observed inertia (" + std::to_string(p) + "," +
                                 std::to_string(n) + ",0) outside the bracket [" +
                                 std::to_string(report.twice_lower) + "/2, " +
                                 std::to_string(report.twice_upper) + "/2]");
        }
    }
    return report;
}

double projection_residual(const SymmetrizerBasis& basis, const DenseMatrix& t) {
    const std::vector<double> c = sym_to_coords(t);
    std::vector<double> proj(c.size(), 0.0);
    for (const auto& elem : basis.basis) {
        const std::vector<double> e = sym_to_coords(elem);
        double dot = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) dot += c[i] * e[i];
        for (std::size_t i = 0; i < c.size(); ++i) proj[i] += dot * e[i];
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double d = c[i] - proj[i];
        num += d * d;
        den += c[i] * c[i];
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

} // namespace symfact
