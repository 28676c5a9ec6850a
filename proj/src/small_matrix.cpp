#include "blowdg/small_matrix.hpp"

#include <cmath>

namespace blowdg {

Matrix Matrix::operator*(const Matrix& other) const {
    assert(cols_ == other.rows_);
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            for (std::size_t j = 0; j < other.cols_; ++j)
                out(i, j) += a * other(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
}

Matrix Matrix::scaled(double s) const {
    Matrix out = *this;
    for (double& v : out.data_) v *= s;
    return out;
}

double Matrix::inf_norm() const {
    double norm = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
        norm = std::max(norm, row);
    }
    return norm;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

double residual_max(const Matrix& a, const Matrix& x) {
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = (i == j) ? -1.0 : 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * x(k, j);
            worst = std::max(worst, std::abs(s));
        }
    return worst;
}

}  // namespace

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix x = Matrix::identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (a(pivot, col) == 0.0) throw std::runtime_error("Matrix::inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(pivot, j));
                std::swap(x(col, j), x(pivot, j));
            }
        }
        const double inv_p = 1.0 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= inv_p;
            x(col, j) *= inv_p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                x(r, j) -= f * x(col, j);
            }
        }
    }

    // Newton refinement: X <- X (2I - A X).  A few sweeps push the residual
    // of the 8x8 equispaced-node mass matrices below 1e-14.
    double res = residual_max(*this, x);
    for (int iter = 0; iter < 3 && res > 1e-14; ++iter) {
        Matrix ax = (*this) * x;
        Matrix two_i_minus = Matrix::identity(n).scaled(2.0) - ax;
        Matrix refined = x * two_i_minus;
        const double next = residual_max(*this, refined);
        if (next >= res) break;
        x = refined;
        res = next;
    }
    return x;
}

}  // namespace blowdg
