#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracol {

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<double> multiply(std::span<const double> x) const;

    double norm_inf() const;
    double norm_one() const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double norm_inf(std::span<const double> x);

/// LU factorization with partial (row) pivoting, P·M = L·U.
class LuFactorization {
public:
    /// Throws SingularMatrixError when a pivot falls below 1e-14·‖M‖_∞.
    explicit LuFactorization(const Matrix& m);

    std::vector<double> solve(std::span<const double> rhs) const;
    /// Solves Mᵀ x = rhs.
    std::vector<double> solve_transposed(std::span<const double> rhs) const;

    /// 1-norm condition number estimate ‖M‖_1·est(‖M⁻¹‖_1) (Hager/Higham).
    double condition_estimate() const;

    std::size_t size() const noexcept { return lu_.rows(); }

private:
    Matrix lu_;
    std::vector<std::size_t> perm_;
    double norm_one_ = 0.0;
};

} // namespace fracol
