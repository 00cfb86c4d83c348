#include "fracol/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracol/error.hpp"
#include "fracol/fracops.hpp"
#include "fracol/quadrature.hpp"

namespace fracol {

namespace {

double checked(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw NumericalOverflowError(std::string("non-finite value while evaluating ") + what);
    }
    return v;
}

} // namespace

void ProblemSpec::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ParameterError("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw ParameterError("T must be positive, got " + std::to_string(T));
    }
    if (!a || !b || !f) {
        throw ParameterError("problem needs the fields a, b and f");
    }
}

MappedProblem map_problem(const ProblemSpec& p) {
    p.validate();
    const double T = p.T;
    MappedProblem mp;
    mp.alpha = p.alpha;
    mp.T = T;
    mp.A = [a = p.a, T](double t) { return a(from_lambda(t, T)); };
    mp.B = [b = p.b, T](double t) { return b(from_lambda(t, T)); };
    mp.F = [f = p.f, T](double t) { return f(from_lambda(t, T)); };
    return mp;
}

CollocationSystem assemble(const MappedProblem& mp, int N) {
    if (N < 1) {
        throw ParameterError("assemble: N must be at least 1");
    }
    const double alpha = mp.alpha;
    const auto lgl = gauss_lobatto_legendre(N);
    const auto gj = gauss_jacobi(N + 1, alpha - 1.0, 0.0);
    const std::size_t n = static_cast<std::size_t>(N) + 1;

    // g(l1, m) = (x+1)^α A(x) Σ_l2 ω_l2 B(μ) L_m(μ) at x = x_l1: the nodal
    // values of the integral term applied to the basis function L_m.
    Matrix nodal(n, n);
    for (std::size_t l1 = 0; l1 < n; ++l1) {
        const double x = lgl.nodes[l1];
        const double factor = std::pow(x + 1.0, alpha) * checked(mp.A(x), "A");
        auto row = nodal.row(l1);
        for (std::size_t l2 = 0; l2 < n; ++l2) {
            const double mu = std::clamp(kernel_map(x, gj.nodes[l2]), -1.0, 1.0);
            const double wb = gj.weights[l2] * checked(mp.B(mu), "B");
            const auto L = legendre_eval_all(N, mu);
            for (std::size_t m = 0; m < n; ++m) {
                row[m] += wb * L[m];
            }
        }
        for (double& v : row) {
            v *= factor;
        }
    }

    // K(i, m) = c_i Σ_l1 g(l1, m) L_i(x_l1) ω_l1,
    // c_i = T^α α / (2^{2α} Γ(α+1) h̃_i).
    const double prefactor = std::pow(mp.T, alpha) * alpha / (std::pow(2.0, 2.0 * alpha) * gamma_fn(alpha + 1.0));
    CollocationSystem sys;
    sys.N = N;
    sys.kernel = Matrix(n, n);
    std::vector<std::vector<double>> basis_at_nodes(n);
    for (std::size_t l1 = 0; l1 < n; ++l1) {
        basis_at_nodes[l1] = legendre_eval_all(N, lgl.nodes[l1]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double c = prefactor / lgl_discrete_norm(static_cast<int>(i), N);
        for (std::size_t m = 0; m < n; ++m) {
            double sum = 0.0;
            for (std::size_t l1 = 0; l1 < n; ++l1) {
                sum += nodal(l1, m) * basis_at_nodes[l1][i] * lgl.weights[l1];
            }
            sys.kernel(i, m) = checked(c * sum, "kernel matrix");
        }
    }

    sys.matrix = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < n; ++m) {
            sys.matrix(i, m) -= sys.kernel(i, m);
        }
    }

    std::vector<double> F_nodal(n);
    for (std::size_t j = 0; j < n; ++j) {
        F_nodal[j] = checked(mp.F(lgl.nodes[j]), "F");
    }
    sys.rhs = nodal_to_modal(F_nodal, lgl).coefficients();
    return sys;
}

LegendreSeries solve_linear(CollocationSystem& sys) {
    const LuFactorization lu(sys.matrix);
    auto u = lu.solve(sys.rhs);
    sys.condition_estimate = lu.condition_estimate();
    return LegendreSeries(std::move(u));
}

SpectralSolution solve(const ProblemSpec& p, int N) {
    const auto mp = map_problem(p);
    auto sys = assemble(mp, N);
    auto series = solve_linear(sys);
    return SpectralSolution{std::move(series), p.alpha, p.T, N, sys.condition_estimate};
}

double eval_solution(const SpectralSolution& s, double x) {
    if (!(x >= 0.0 && x <= s.T)) {
        throw DomainError("eval_solution: x = " + std::to_string(x) + " outside [0, T]");
    }
    return series_eval(s.series, std::clamp(to_lambda(x, s.T), -1.0, 1.0));
}

double residual(const SpectralSolution& s, const ProblemSpec& p, std::span<const double> grid, double tol) {
    if (grid.empty()) {
        throw ParameterError("residual: empty grid");
    }
    const Field by = [&](double x) { return p.b(x) * eval_solution(s, x); };
    double worst = 0.0;
    for (double x : grid) {
        const double r = eval_solution(s, x) - p.a(x) * rl_numeric(p.alpha, by, x, tol) - p.f(x);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

} // namespace fracol
