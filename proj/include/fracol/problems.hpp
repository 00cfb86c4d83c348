#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracol/expr.hpp"
#include "fracol/solver.hpp"

namespace fracol {

/// Benchmark problems 1-3 (smooth solution with a t^{5/2} coefficient,
/// linear solution with α = 2/3, and the erfc solution with α = 1/2).
ProblemSpec builtin(int id);

Field make_field(ExprAst expr);

/// Problem assembled from expression sources for a, b, f and optionally
/// the exact solution.
ProblemSpec expression_problem(double alpha, double T, const std::string& a, const std::string& b,
                               const std::string& f, const std::optional<std::string>& exact);

struct ErrorNorms {
    double l2 = 0.0;
    double linf = 0.0;
};

/// L∞ on a 1001-point uniform grid over [0, T]; L2 with a (2N+16)-point
/// Gauss–Legendre rule mapped to [0, T].
ErrorNorms error_norms(const SpectralSolution& s, const Field& exact);

struct ConvergenceRecord {
    int N = 0;
    double l2_error = 0.0;
    double linf_error = 0.0;
    double condition_estimate = 0.0;
    std::optional<std::string> failure;
};

struct ConvergenceReport {
    std::string problem;
    std::vector<ConvergenceRecord> records; // ascending N
    /// Least-squares slope of log10(L2) vs N over entries with L2 > 1e-14;
    /// absent with fewer than two such entries.
    std::optional<double> slope;
};

/// Per-N solves run concurrently; a failed N is recorded, not rethrown.
ConvergenceReport convergence_study(const ProblemSpec& p, std::vector<int> Ns);

} // namespace fracol
