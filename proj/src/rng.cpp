#include "symfact/rng.hpp"

#include <algorithm>
#include <cmath>

namespace symfact {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined state
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

double gaussian(Rng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(rng);
}

DenseMatrix random_orthogonal(std::size_t m, Rng& rng) {
    DenseMatrix a(m, m);
    for (double& v : a.entries()) v = gaussian(rng);
    // modified Gram-Schmidt on columns
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            double dot = 0.0;
            for (std::size_t i = 0; i < m; ++i) dot += a(i, k) * a(i, j);
            for (std::size_t i = 0; i < m; ++i) a(i, j) -= dot * a(i, k);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < m; ++i) norm += a(i, j) * a(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-8) {
            // degenerate draw; replace with a unit vector and redo this column
            for (std::size_t i = 0; i < m; ++i) a(i, j) = gaussian(rng);
            --j;
            continue;
        }
        const double sign = (a(j, j) >= 0.0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < m; ++i) a(i, j) *= sign / norm;
    }
    return a;
}

DenseMatrix random_well_conditioned(std::size_t m, Rng& rng, double spread) {
    const DenseMatrix q1 = random_orthogonal(m, rng);
    const DenseMatrix q2 = random_orthogonal(m, rng);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix d(m, m);
    const double half_log = 0.5 * std::log(spread);
    for (std::size_t i = 0; i < m; ++i) d(i, i) = std::exp(half_log * u(rng));
    return multiply(multiply(q1, d), q2);
}

DenseMatrix random_symmetric(std::size_t m, Rng& rng) {
    DenseMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const double v = gaussian(rng);
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return a;
}

DenseMatrix random_symmetric_with_inertia(const Inertia& target, Rng& rng) {
    if (target.z != 0) throw InvalidSpec("prescribed inertia must have z == 0");
    const std::size_t m = static_cast<std::size_t>(target.p + target.n);
    const DenseMatrix q = random_orthogonal(m, rng);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    DenseMatrix d(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const double v = mag(rng);
        d(i, i) = (i < static_cast<std::size_t>(target.p)) ? v : -v;
    }
    return multiply(multiply(q, d), transpose(q));
}

namespace {

// draws values until they are pairwise separated by min_gap
std::vector<double> separated_draws(int count, double lo, double hi, double min_gap,
                                    Rng& rng) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 10000) {
            throw InternalError("could not draw separated eigenvalues");
        }
        const double cand = u(rng);
        bool ok = std::fabs(cand) > min_gap;
        for (double v : out) ok = ok && std::fabs(cand - v) > min_gap;
        if (ok) out.push_back(cand);
    }
    return out;
}

} // namespace

SpectrumSpec random_simple_spectrum(int complex_pairs, int positive_reals,
                                    int negative_reals, Rng& rng) {
    SpectrumSpec spec;
    const auto pos = separated_draws(positive_reals, 0.3, 3.0, 0.05, rng);
    auto neg = separated_draws(negative_reals, 0.3, 3.0, 0.05, rng);
    for (double v : pos) spec.real_blocks.push_back({v, 1});
    for (double v : neg) spec.real_blocks.push_back({-v, 1});
    const auto re = separated_draws(complex_pairs, -2.0, 2.0, 0.05, rng);
    std::uniform_real_distribution<double> im(0.3, 2.0);
    for (double a : re) spec.complex_blocks.push_back({a, im(rng), 1});
    return spec;
}

SpectrumSpec random_all_complex_spectrum(std::size_t m, Rng& rng) {
    if (m % 2 != 0) throw InvalidSpec("all-complex spectrum needs even dimension");
    return random_simple_spectrum(static_cast<int>(m / 2), 0, 0, rng);
}

} // namespace symfact
