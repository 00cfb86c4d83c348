#include "fracol/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fracol/error.hpp"

namespace fracol {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

std::vector<double> Matrix::multiply(std::span<const double> x) const {
    if (x.size() != cols_) {
        throw SizeMismatchError("Matrix::multiply: vector length does not match column count");
    }
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto r = row(i);
        y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
    }
    return y;
}

double Matrix::norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (double v : row(i)) {
            s += std::abs(v);
        }
        best = std::max(best, s);
    }
    return best;
}

double Matrix::norm_one() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += std::abs((*this)(i, j));
        }
        best = std::max(best, s);
    }
    return best;
}

double Matrix::max_abs() const {
    double best = 0.0;
    for (double v : data_) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

double norm_inf(std::span<const double> x) {
    double best = 0.0;
    for (double v : x) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

LuFactorization::LuFactorization(const Matrix& m) : lu_(m), perm_(m.rows()) {
    const std::size_t n = m.rows();
    if (m.cols() != n) {
        throw SizeMismatchError("LuFactorization: matrix is not square");
    }
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    norm_one_ = m.norm_one();
    const double threshold = 1e-14 * m.norm_inf();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) {
                p = i;
            }
        }
        if (!(std::abs(lu_(p, k)) > threshold)) {
            throw SingularMatrixError("LuFactorization: pivot " + std::to_string(k) +
                                      " below 1e-14 of the matrix norm");
        }
        if (p != k) {
            std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
            std::swap(perm_[k], perm_[p]);
        }
        const double pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / pivot;
            lu_(i, k) = factor;
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                lu_(i, j) -= factor * lu_(k, j);
            }
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
    const std::size_t n = size();
    if (rhs.size() != n) {
        throw SizeMismatchError("LuFactorization::solve: right-hand side has wrong length");
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = rhs[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) {
            s -= lu_(i, j) * x[j];
        }
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= lu_(i, j) * x[j];
        }
        x[i] = s / lu_(i, i);
    }
    return x;
}

std::vector<double> LuFactorization::solve_transposed(std::span<const double> rhs) const {
    // Mᵀ = Uᵀ Lᵀ P, so solve Uᵀ w = rhs, Lᵀ v = w, then x = Pᵀ v.
    const std::size_t n = size();
    if (rhs.size() != n) {
        throw SizeMismatchError("LuFactorization::solve_transposed: right-hand side has wrong length");
    }
    std::vector<double> w(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) {
        double s = w[i];
        for (std::size_t j = 0; j < i; ++j) {
            s -= lu_(j, i) * w[j];
        }
        w[i] = s / lu_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = w[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= lu_(j, i) * w[j];
        }
        w[i] = s;
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[perm_[i]] = w[i];
    }
    return x;
}

double LuFactorization::condition_estimate() const {
    // Hager's method: maximize ‖M⁻¹x‖_1 over the unit 1-ball.
    const std::size_t n = size();
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    double estimate = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        const auto y = solve(x);
        double y_norm = 0.0;
        for (double v : y) {
            y_norm += std::abs(v);
        }
        if (iter > 0 && y_norm <= estimate) {
            break;
        }
        estimate = y_norm;
        std::vector<double> sign(n);
        for (std::size_t i = 0; i < n; ++i) {
            sign[i] = y[i] >= 0.0 ? 1.0 : -1.0;
        }
        const auto z = solve_transposed(sign);
        std::size_t j = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::abs(z[i]) > std::abs(z[j])) {
                j = i;
            }
        }
        if (iter > 0 && std::abs(z[j]) <= std::inner_product(z.begin(), z.end(), x.begin(), 0.0)) {
            break;
        }
        std::fill(x.begin(), x.end(), 0.0);
        x[j] = 1.0;
    }
    return norm_one_ * estimate;
}

} // namespace fracol
