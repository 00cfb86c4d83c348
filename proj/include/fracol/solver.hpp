#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracol/linalg.hpp"
#include "fracol/orthopoly.hpp"

namespace fracol {

using Field = std::function<double(double)>;

/// y(x) = a(x)·I^α{b(x)·y(x)} + f(x) on [0, T], 0 < α < 1.
struct ProblemSpec {
    std::string name;
    double alpha = 0.5;
    double T = 1.0;
    Field a;
    Field b;
    Field f;
    std::optional<Field> exact;

    /// Throws ParameterError on α ∉ (0,1), T ≤ 0 or a missing field.
    void validate() const;
};

/// The problem pulled back to Λ by x = T(t+1)/2.
struct MappedProblem {
    double alpha = 0.5;
    double T = 1.0;
    Field A;
    Field B;
    Field F;
};

/// μ(t, θ) = ((t+1)/2)θ + (t−1)/2; maps θ ∈ Λ onto [−1, t].
constexpr double kernel_map(double t, double theta) noexcept {
    return 0.5 * (t + 1.0) * theta + 0.5 * (t - 1.0);
}

inline double to_lambda(double x, double T) noexcept { return 2.0 * x / T - 1.0; }
inline double from_lambda(double t, double T) noexcept { return 0.5 * T * (t + 1.0); }

/// Modal collocation system (I − K)u = f̂.
struct CollocationSystem {
    int N = 0;
    Matrix kernel;  // K
    Matrix matrix;  // I − K
    std::vector<double> rhs;
    std::optional<double> condition_estimate;
};

struct SpectralSolution {
    LegendreSeries series;
    double alpha = 0.5;
    double T = 1.0;
    int N = 0;
    std::optional<double> condition_estimate;
};

MappedProblem map_problem(const ProblemSpec& p);

/// Builds K from the (N+1)-point LGL rule in t and the (N+1)-point
/// Gauss–Jacobi(α−1, 0) rule in θ; rhs is the discrete Legendre transform of F.
CollocationSystem assemble(const MappedProblem& mp, int N);

/// LU with row pivoting; records a condition estimate on `sys`.
LegendreSeries solve_linear(CollocationSystem& sys);

SpectralSolution solve(const ProblemSpec& p, int N);

/// y_N(x) for x ∈ [0, T].
double eval_solution(const SpectralSolution& s, double x);

/// max over `grid` of |y_N − a·I^α(b·y_N) − f|, with I^α from rl_numeric.
double residual(const SpectralSolution& s, const ProblemSpec& p, std::span<const double> grid, double tol);

} // namespace fracol
