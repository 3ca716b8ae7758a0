#include "symfact/spectrum.hpp"

#include <cmath>
#include <string>

namespace symfact {

std::size_t SpectrumSpec::dimension() const {
    std::size_t m = 0;
    for (const auto& b : real_blocks) m += static_cast<std::size_t>(b.ell);
    for (const auto& b : complex_blocks) m += 2 * static_cast<std::size_t>(b.ell);
    return m;
}

void SpectrumSpec::validate() const {
    if (dimension() == 0) {
        throw InvalidSpec("spectrum spec has dimension zero");
    }
    for (const auto& b : real_blocks) {
        if (b.ell < 1) throw InvalidSpec("real block size must be >= 1");
        if (b.lambda == 0.0) {
            throw InvalidSpec("real block with eigenvalue 0 (matrix must be invertible)");
        }
        if (!std::isfinite(b.lambda)) throw InvalidSpec("non-finite real eigenvalue");
    }
    for (const auto& b : complex_blocks) {
        if (b.ell < 1) throw InvalidSpec("complex block chain length must be >= 1");
        if (!(b.b > 0.0)) throw InvalidSpec("complex block needs imaginary part > 0");
        if (!std::isfinite(b.a) || !std::isfinite(b.b)) {
            throw InvalidSpec("non-finite complex block parameters");
        }
    }
}

DenseMatrix jordan_block_real(double lambda, int ell) {
    if (ell < 1) throw InvalidBlock("Jordan block size must be >= 1");
    const auto k = static_cast<std::size_t>(ell);
    DenseMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        out(i, i) = lambda;
        if (i + 1 < k) out(i, i + 1) = 1.0;
    }
    return out;
}

DenseMatrix jordan_block_complex(double a, double b, int ell) {
    if (b <= 0.0) throw InvalidBlock("complex Jordan block needs b > 0");
    if (ell < 1) throw InvalidBlock("Jordan block chain length must be >= 1");
    const auto k = 2 * static_cast<std::size_t>(ell);
    DenseMatrix out(k, k);
    for (std::size_t blk = 0; blk < static_cast<std::size_t>(ell); ++blk) {
        const std::size_t r = 2 * blk;
        out(r, r) = a;
        out(r, r + 1) = -b;
        out(r + 1, r) = b;
        out(r + 1, r + 1) = a;
        if (blk + 1 < static_cast<std::size_t>(ell)) {
            out(r, r + 2) = 1.0;
            out(r + 1, r + 3) = 1.0;
        }
    }
    return out;
}

DenseMatrix exchange_matrix(std::size_t k) {
    DenseMatrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) out(i, k - 1 - i) = 1.0;
    return out;
}

Inertia exchange_inertia(std::size_t k) {
    Inertia out;
    out.p = static_cast<int>((k + 1) / 2);
    out.n = static_cast<int>(k / 2);
    out.z = 0;
    return out;
}

std::pair<DenseMatrix, DenseMatrix> symmetric_block_factors(const DenseMatrix& block) {
    if (!block.square()) throw NotJordanBlock("block must be square");
    const std::size_t k = block.rows();
    const DenseMatrix y = exchange_matrix(k);
    DenseMatrix jsym(k, k);
    // row reversal of the block
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) jsym(i, j) = block(k - 1 - i, j);
    if (symmetry_defect(jsym) > 1e-12) {
        throw NotJordanBlock("block is not persymmetric; row reversal is not symmetric");
    }
    return {y, jsym};
}

JordanAssembly assemble(const SpectrumSpec& spec, const Config& cfg) {
    spec.validate();
    const std::size_t m = spec.dimension();
    if (m > cfg.size_cap) {
        throw CapExceeded("spectrum dimension " + std::to_string(m) +
                          " exceeds the size cap " + std::to_string(cfg.size_cap));
    }
    JordanAssembly out;
    out.J = DenseMatrix(m, m);
    out.Y = DenseMatrix(m, m);
    out.Jsym = DenseMatrix(m, m);

    std::size_t offset = 0;
    auto place = [&](const DenseMatrix& block) {
        const auto [y, jsym] = symmetric_block_factors(block);
        const std::size_t k = block.rows();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                out.J(offset + i, offset + j) = block(i, j);
                out.Y(offset + i, offset + j) = y(i, j);
                out.Jsym(offset + i, offset + j) = jsym(i, j);
            }
        }
        const Inertia yi = exchange_inertia(k);
        out.inertia_Y.p += yi.p;
        out.inertia_Y.n += yi.n;
        offset += k;
    };

    for (const auto& b : spec.real_blocks) place(jordan_block_real(b.lambda, b.ell));
    for (const auto& b : spec.complex_blocks) place(jordan_block_complex(b.a, b.b, b.ell));

    out.inertia_Jsym = inertia(out.Jsym, cfg);
    out.inertia_Jsym_defined = true;
    return out;
}

Inertia jsym_inertia_real_spectrum(const SpectrumSpec& spec) {
    if (!spec.complex_blocks.empty()) {
        throw NotApplicable("closed-form Jsym inertia requires an all-real spectrum");
    }
    spec.validate();
    Inertia out;
    for (const auto& b : spec.real_blocks) {
        const auto ell = static_cast<std::size_t>(b.ell);
        const int hi = static_cast<int>((ell + 1) / 2);
        const int lo = static_cast<int>(ell / 2);
        if (b.lambda > 0) {
            out.p += hi;
            out.n += lo;
        } else {
            out.p += lo;
            out.n += hi;
        }
    }
    return out;
}

} // namespace symfact
