#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace blowdg {

/// Dense row-major matrix sized for cell-local DG operators (at most 8x8
/// here, but the implementation is generic).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    const std::vector<double>& data() const { return data_; }
    const double* raw() const { return data_.data(); }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(double s) const;

    /// Max absolute row sum.
    double inf_norm() const;

    /// Largest |entry|.
    double max_abs() const;

    /// Inverse by Gauss-Jordan elimination with partial pivoting, followed
    /// by Newton refinement until the residual ||A*X - I||_max stalls.
    Matrix inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace blowdg
