// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.  Each line reports the measured quantity, the bound and
// the wall time against its budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fracol/fracops.hpp"
#include "fracol/orthopoly.hpp"
#include "fracol/problems.hpp"
#include "fracol/solver.hpp"
#include "quadrature_checks.hpp"
#include "solver_checks.hpp"

using namespace fracol;

namespace {

struct Verdict {
    bool ok = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < budget_seconds;
    const bool ok = v.ok && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s  %d  %s: %s; time %.3fs (< %gs)%s\n", ok ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs,
                budget_seconds, in_time ? "" : " over budget");
    std::fflush(stdout);
}

double polynomial_value(const std::vector<MonomialTerm>& terms, double s) {
    double v = 0.0;
    for (const auto& t : terms) {
        v += t.coefficient * std::pow(s, t.exponent);
    }
    return v;
}

} // namespace

int main() {
    const std::vector<double> alphas{0.1, 0.5, 2.0 / 3.0, 0.9};

    criterion(1, "singular problem 3 against reference values at N=8 and N=10", 1.0, [] {
        const auto p = builtin(3);
        const auto& y = *p.exact;
        const auto s8 = solve(p, 8);
        const auto s10 = solve(p, 10);
        double e8 = 0.0, e10 = 0.0;
        for (int k = 0; k <= 10; ++k) {
            const double t = k / 10.0;
            e8 = std::max(e8, std::abs(eval_solution(s8, t) - y(t)));
            e10 = std::max(e10, std::abs(eval_solution(s10, t) - y(t)));
        }
        return Verdict{e10 <= 1e-8 && e8 <= 1e-7,
                       fmt("max error N=10 %.3e (<= 1e-8), N=8 %.3e (<= 1e-7)", e10, e8)};
    });

    criterion(2, "exponential L2 decay on problem 1, N=4..20", 5.0, [] {
        const auto r = convergence_study(builtin(1), {4, 6, 8, 10, 12, 14, 16, 18, 20});
        double l2_16 = NAN;
        for (const auto& rec : r.records) {
            if (rec.N == 16) {
                l2_16 = rec.l2_error;
            }
        }
        const double slope = r.slope.value_or(NAN);
        return Verdict{slope <= -0.5 && l2_16 <= 1e-8,
                       fmt("slope %.3f (<= -0.5), L2(16) %.3e (<= 1e-8)", slope, l2_16)};
    });

    criterion(3, "problem 2 at N=4", 1.0, [] {
        const auto p = builtin(2);
        const auto e = error_norms(solve(p, 4), *p.exact);
        return Verdict{e.linf <= 1e-5, fmt("Linf %.3e (<= 1e-5)", e.linf)};
    });

    criterion(4, "quadrature exactness, GL/LGL/GJ up to 24 points", 5.0, [] {
        const auto r = checks::exactness_sweep(24, 200, 4242);
        return Verdict{r.worst_relative <= 1e-11,
                       fmt("worst relative error %.3e (<= 1e-11)", r.worst_relative) + " at " + r.worst_case};
    });

    criterion(5, "numeric fractional integral against closed form", 5.0, [&] {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        std::uniform_int_distribution<int> deg(0, 6);
        std::uniform_real_distribution<double> xs(0.05, 1.0);
        double worst_poly = 0.0;
        for (double alpha : alphas) {
            for (int i = 0; i < 50; ++i) {
                std::vector<MonomialTerm> terms;
                const int d = deg(rng);
                for (int k = 0; k <= d; ++k) {
                    terms.push_back({coef(rng), static_cast<double>(k)});
                }
                const double x = xs(rng);
                const double numeric =
                    rl_numeric(alpha, [&](double s) { return polynomial_value(terms, s); }, x, 1e-12);
                worst_poly = std::max(worst_poly, std::abs(numeric - rl_poly(alpha, terms, x)));
            }
        }
        double worst_semigroup = 0.0;
        for (double a : alphas) {
            for (double b : alphas) {
                for (double nu : {0.0, 0.5, 1.0, 2.0, 3.0}) {
                    for (double x : {0.1, 0.5, 1.0}) {
                        const auto twice = rl_monomial_term(a, rl_monomial_term(b, {1.0, nu}));
                        const double lhs = twice.coefficient * std::pow(x, twice.exponent);
                        worst_semigroup = std::max(worst_semigroup, std::abs(lhs - rl_monomial(a + b, nu, x)));
                    }
                }
            }
        }
        return Verdict{worst_poly <= 1e-11 && worst_semigroup <= 1e-12,
                       fmt("polynomials %.3e (<= 1e-11), semigroup %.3e (<= 1e-12)", worst_poly, worst_semigroup)};
    });

    criterion(6, "collocation identity and left-endpoint value", 1.0, [] {
        double worst_nodal = 0.0, worst_endpoint = 0.0;
        for (int id : {1, 2, 3}) {
            const auto p = builtin(id);
            const auto mp = map_problem(p);
            for (int N : {6, 10}) {
                const auto s = solve(p, N);
                const double scale = std::max(1.0, checks::rhs_norm(p, N));
                for (double r : checks::nodal_collocation_residuals(p, s)) {
                    worst_nodal = std::max(worst_nodal, std::abs(r) / scale);
                }
                const double F0 = mp.F(-1.0);
                const double gap = std::abs(series_eval(s.series, -1.0) - F0) / std::max(1.0, std::abs(F0));
                worst_endpoint = std::max(worst_endpoint, gap);
            }
        }
        return Verdict{worst_nodal <= 1e-10 && worst_endpoint <= 1e-10,
                       fmt("scaled nodal residual %.3e (<= 1e-10), endpoint %.3e (<= 1e-10)", worst_nodal,
                           worst_endpoint)};
    });

    const auto grid = checks::uniform_grid(0.05, 1.0, 21);

    criterion(7, "manufactured polynomial problem residual at N=8", 2.0, [&] {
        const auto p = checks::manufactured_problem();
        const double r = residual(solve(p, 8), p, grid, 1e-12);
        return Verdict{r <= 1e-9, fmt("max residual %.3e (<= 1e-9) on 21 points", r)};
    });

    criterion(8, "builtin problems satisfy their own equations", 5.0, [&] {
        double worst = 0.0;
        std::string where;
        for (int id : {1, 2, 3}) {
            const double r = checks::exact_residual(builtin(id), grid, 5e-9);
            if (r >= worst) {
                worst = r;
                where = "problem " + std::to_string(id);
            }
        }
        return Verdict{worst <= 1e-8, fmt("max residual %.3e (<= 1e-8) on 21 points, worst ", worst) + where};
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
