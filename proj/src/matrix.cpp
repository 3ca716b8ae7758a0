#include "symfact/matrix.hpp"

#include <cmath>
#include <string>

namespace symfact {

namespace {

std::string shape_str(const DenseMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

} // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                                " does not match shape " + shape_str(*this));
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) {
            throw Error("non-finite entry in matrix construction");
        }
    }
}

DenseMatrix DenseMatrix::identity(std::size_t m) {
    DenseMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i) out(i, i) = 1.0;
    return out;
}

DenseMatrix multiply_serial(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("cannot multiply " + shape_str(a) + " by " + shape_str(b));
    }
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("cannot multiply " + shape_str(a) + " by " + shape_str(b));
    }
    DenseMatrix out(a.rows(), b.cols());
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for if (m >= 32) schedule(static)
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(static_cast<std::size_t>(i), k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(static_cast<std::size_t>(i), j) += aik * b(k, j);
            }
        }
    }
    return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j);
    return out;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("cannot add " + shape_str(a) + " and " + shape_str(b));
    }
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] += b.entries()[i];
    return out;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("cannot subtract " + shape_str(a) + " and " + shape_str(b));
    }
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.entries().size(); ++i) out.entries()[i] -= b.entries()[i];
    return out;
}

DenseMatrix scale(const DenseMatrix& a, double s) {
    DenseMatrix out = a;
    for (double& v : out.entries()) v *= s;
    return out;
}

double frobenius_norm(const DenseMatrix& a) {
    double sum = 0.0;
    for (double v : a.entries()) sum += v * v;
    return std::sqrt(sum);
}

double symmetry_defect(const DenseMatrix& a) {
    if (!a.square()) {
        throw DimensionMismatch("symmetry defect needs a square matrix, got " + shape_str(a));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const double d = a(i, j) - a(j, i);
            sum += 2.0 * d * d;
        }
    }
    return std::sqrt(sum) / std::max(1.0, frobenius_norm(a));
}

namespace {

// LU with partial pivoting; returns false when a pivot vanishes relative to
// its row scale. perm_sign collects the permutation parity for determinants.
bool lu_decompose(DenseMatrix& a, std::vector<std::size_t>& perm, double pivot_tol,
                  int& perm_sign) {
    const std::size_t m = a.rows();
    perm.resize(m);
    perm_sign = 1;
    std::vector<double> row_scale(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        perm[i] = i;
        for (std::size_t j = 0; j < m; ++j) row_scale[i] = std::max(row_scale[i], std::fabs(a(i, j)));
        if (row_scale[i] == 0.0) return false;
    }
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t piv = k;
        double best = std::fabs(a(k, k)) / row_scale[k];
        for (std::size_t i = k + 1; i < m; ++i) {
            const double cand = std::fabs(a(i, k)) / row_scale[i];
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best <= pivot_tol) return false;
        if (piv != k) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(perm[k], perm[piv]);
            std::swap(row_scale[k], row_scale[piv]);
            perm_sign = -perm_sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            const double f = a(i, k) / a(k, k);
            a(i, k) = f;
            for (std::size_t j = k + 1; j < m; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

} // namespace

DenseMatrix invert(const DenseMatrix& a, double pivot_tol) {
    if (!a.square()) {
        throw DimensionMismatch("cannot invert non-square " + shape_str(a));
    }
    const std::size_t m = a.rows();
    DenseMatrix lu = a;
    std::vector<std::size_t> perm;
    int sign = 0;
    if (!lu_decompose(lu, perm, pivot_tol, sign)) {
        throw SingularMatrix("matrix is numerically singular (pivot below " +
                             std::to_string(pivot_tol) + " of row norm)");
    }
    DenseMatrix out(m, m);
    std::vector<double> col(m), x(m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t i = 0; i < m; ++i) col[i] = (perm[i] == c) ? 1.0 : 0.0;
        // forward
        for (std::size_t i = 0; i < m; ++i) {
            x[i] = col[i];
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
        }
        // back
        for (std::size_t ii = m; ii-- > 0;) {
            for (std::size_t j = ii + 1; j < m; ++j) x[ii] -= lu(ii, j) * x[j];
            x[ii] /= lu(ii, ii);
        }
        for (std::size_t i = 0; i < m; ++i) out(i, c) = x[i];
    }
    return out;
}

double determinant(const DenseMatrix& a) {
    if (!a.square()) {
        throw DimensionMismatch("determinant needs a square matrix, got " + shape_str(a));
    }
    DenseMatrix lu = a;
    std::vector<std::size_t> perm;
    int sign = 0;
    if (!lu_decompose(lu, perm, 0.0, sign)) return 0.0;
    double det = sign;
    for (std::size_t i = 0; i < a.rows(); ++i) det *= lu(i, i);
    return det;
}

double condition_estimate(const DenseMatrix& a, double pivot_tol) {
    return frobenius_norm(a) * frobenius_norm(invert(a, pivot_tol));
}

} // namespace symfact
