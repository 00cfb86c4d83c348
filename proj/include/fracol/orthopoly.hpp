#pragma once

#include <span>
#include <vector>

#include "fracol/quadrature.hpp"

namespace fracol {

/// Modal coefficients u_0..u_N of U(t) = Σ u_i L_i(t) on Λ.
class LegendreSeries {
public:
    /// Throws ParameterError if `coefficients` is empty or holds a non-finite value.
    explicit LegendreSeries(std::vector<double> coefficients);

    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }
    double operator[](std::size_t i) const { return coefficients_[i]; }

private:
    std::vector<double> coefficients_;
};

/// [L_0(x), ..., L_N(x)] by the three-term recurrence.
std::vector<double> legendre_eval_all(int N, double x);

double legendre_eval(int n, double x);

/// L'_n(x).
double legendre_deriv(int n, double x);

/// J_n^{q1,q2}(x), orthogonal against (1−x)^q1 (1+x)^q2.
double jacobi_eval(double q1, double q2, int n, double x);

/// γ_n^{q1,q2} = ∫ (J_n^{q1,q2})² (1−x)^q1 (1+x)^q2 dx.
double jacobi_norm(double q1, double q2, int n);

/// (L_i, L_i)_N on the (N+1)-point LGL grid: 2/(2i+1) for i < N, 2/N for i = N.
double lgl_discrete_norm(int i, int N);

/// Discrete Legendre transform of nodal values on an LGL rule.  The result
/// interpolates `values` at every node.
LegendreSeries nodal_to_modal(std::span<const double> values, const QuadratureRule& rule);

double series_eval(const LegendreSeries& series, double x);

} // namespace fracol
