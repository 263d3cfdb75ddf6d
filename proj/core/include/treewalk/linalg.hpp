#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace treewalk {

/// Dense row-major square-or-rectangular matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    double trace() const noexcept;
    /// Frobenius norm.
    double norm() const noexcept;

    /// Delete row r and column c.
    Matrix minor(std::size_t r, std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// LU factorization with partial pivoting, PA = LU.
class LuDecomposition {
public:
    /// Throws NumericalError when a pivot is exactly zero or when the
    /// matrix is not square.
    explicit LuDecomposition(Matrix a);

    std::vector<double> solve(std::span<const double> b) const;
    double determinant() const noexcept;

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
};

struct SymmetricEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j pairs with values[j]
    std::size_t sweeps = 0;
};

/// Cyclic Jacobi for a symmetric matrix. Stops once the off-diagonal
/// Frobenius mass drops below 1e-15 of the total; throws NumericalError
/// after `max_sweeps` sweeps.
SymmetricEigen jacobi_eigen(const Matrix& symmetric, std::size_t max_sweeps = 100);

/// max_j ||M x_j - θ_j x_j||_2.
double max_eigen_residual(const Matrix& m, const SymmetricEigen& eig);

}  // namespace treewalk
