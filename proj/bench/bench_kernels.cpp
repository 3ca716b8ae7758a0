// Compares the OpenMP kernels against their serial references and reports
// timings. Results must agree bit-for-bit; the benchmark aborts otherwise.
#include <chrono>
#include <cstdio>
#include <functional>

#include "symfact/factorize.hpp"
#include "symfact/pencil.hpp"
#include "symfact/rng.hpp"
#include "symfact/symmetrizer.hpp"

using namespace symfact;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& body, int reps) {
    body(); // warm-up
    const auto start = Clock::now();
    for (int i = 0; i < reps; ++i) body();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-24s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                identical ? "identical" : "MISMATCH");
    if (!identical) std::exit(1);
}

} // namespace

int main() {
    Rng rng(1);

    // dense multiply
    {
        const std::size_t n = 256;
        DenseMatrix a(n, n), b(n, n);
        for (double& v : a.entries()) v = gaussian(rng);
        for (double& v : b.entries()) v = gaussian(rng);
        DenseMatrix serial_out(1, 1), parallel_out(1, 1);
        const double ts = time_ms([&] { serial_out = multiply_serial(a, b); }, 3);
        const double tp = time_ms([&] { parallel_out = multiply(a, b); }, 3);
        report("multiply 256x256", ts, tp, serial_out == parallel_out);
    }

    // pencil grid evaluation
    {
        const SpectrumSpec spec = random_simple_spectrum(2, 3, 3, rng);
        const DenseMatrix s = random_well_conditioned(spec.dimension(), rng);
        const auto [built, fact] = factorize_from_spec(spec, s);
        (void)built;
        std::vector<double> grid;
        for (int i = 0; i <= 2048; ++i) grid.push_back(i / 2048.0);
        std::vector<std::vector<double>> serial_out, parallel_out;
        const double ts = time_ms(
            [&] { serial_out = eval_grid_serial(PencilKind::V, fact.T, fact.W, grid); }, 3);
        const double tp =
            time_ms([&] { parallel_out = eval_grid(PencilKind::V, fact.T, fact.W, grid); }, 3);
        report("pencil grid 2049 pts", ts, tp, serial_out == parallel_out);
    }

    // symmetrizer-space census
    {
        const SpectrumSpec spec = random_simple_spectrum(2, 1, 1, rng);
        const DenseMatrix s = random_well_conditioned(spec.dimension(), rng);
        const auto [b, fact] = factorize_from_spec(spec, s);
        (void)fact;
        const SymmetrizerBasis basis = symmetrizer_basis(b);
        InertiaCensus serial_out, parallel_out;
        const double ts =
            time_ms([&] { serial_out = sample_census_serial(basis, b, 2000, 99); }, 3);
        const double tp = time_ms([&] { parallel_out = sample_census(basis, b, 2000, 99); }, 3);
        report("census 2000 samples", ts, tp,
               serial_out.observed == parallel_out.observed &&
                   serial_out.singular_rejections == parallel_out.singular_rejections);
    }

    return 0;
}
