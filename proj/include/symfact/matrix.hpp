#pragma once

#include <cstddef>
#include <vector>

#include "symfact/errors.hpp"

namespace symfact {

/// Dense real matrix, row-major. Entries are validated to be finite at
/// construction; this is the carrier type for every matrix in the library.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const { return entries_; }
    std::vector<double>& entries() { return entries_; }

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix multiply_serial(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, double s);

double frobenius_norm(const DenseMatrix& a);

/// ||A - A^T||_F / max(1, ||A||_F); zero for exactly symmetric input.
double symmetry_defect(const DenseMatrix& a);

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// Throws SingularMatrix when a pivot falls below pivot_tol * row scale.
DenseMatrix invert(const DenseMatrix& a, double pivot_tol = 1e-12);

/// Determinant via LU with partial pivoting (0 when elimination breaks down).
double determinant(const DenseMatrix& a);

/// Frobenius-based condition estimate ||A||_F * ||A^{-1}||_F.
double condition_estimate(const DenseMatrix& a, double pivot_tol = 1e-12);

} // namespace symfact
