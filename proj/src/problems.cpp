#include "fracol/problems.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <set>

#include "fracol/error.hpp"
#include "fracol/fracops.hpp"
#include "fracol/quadrature.hpp"

namespace fracol {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSlopeFloor = 1e-14;

} // namespace

ProblemSpec builtin(int id) {
    ProblemSpec p;
    switch (id) {
    case 1:
        p.name = "example-1";
        p.alpha = 0.5;
        p.T = 1.0;
        p.a = [](double t) { return 0.01 * std::pow(t, 2.5); };
        p.b = [](double) { return 1.0; };
        p.f = [](double t) { return kSqrtPi * std::pow(1.0 + t, -1.5) - 0.02 * t * t * t / (1.0 + t); };
        p.exact = Field([](double t) { return kSqrtPi * std::pow(1.0 + t, -1.5); });
        return p;
    case 2: {
        // Printed with kernel s(t−s)^{1/3}/(27Γ(2/3)); encoded as α = 2/3,
        // a ≡ 1/27, b(s) = s, which balances the t^{8/3}/40 forcing term.
        const double g23 = gamma_fn(2.0 / 3.0);
        p.name = "example-2";
        p.alpha = 2.0 / 3.0;
        p.T = 1.0;
        p.a = [](double) { return 1.0 / 27.0; };
        p.b = [](double s) { return s; };
        p.f = [g23](double t) { return g23 * t - std::pow(t, 8.0 / 3.0) / 40.0; };
        p.exact = Field([g23](double t) { return g23 * t; });
        return p;
    }
    case 3:
        p.name = "example-3";
        p.alpha = 0.5;
        p.T = 1.0;
        p.a = [](double) { return -1.0; };
        p.b = [](double) { return 1.0; };
        p.f = [](double t) { return 2.0 * std::sqrt(t / std::numbers::pi); };
        p.exact = Field([](double t) { return 1.0 - std::exp(t) * fracol::erfc(std::sqrt(t)); });
        return p;
    default:
        throw UnknownIdError("unknown builtin problem id " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
}

Field make_field(ExprAst expr) {
    return [e = std::move(expr)](double t) { return e.evaluate(t); };
}

ProblemSpec expression_problem(double alpha, double T, const std::string& a, const std::string& b,
                               const std::string& f, const std::optional<std::string>& exact) {
    ProblemSpec p;
    p.name = "expression";
    p.alpha = alpha;
    p.T = T;
    p.a = make_field(parse_expr(a));
    p.b = make_field(parse_expr(b));
    p.f = make_field(parse_expr(f));
    if (exact) {
        p.exact = make_field(parse_expr(*exact));
    }
    p.validate();
    return p;
}

ErrorNorms error_norms(const SpectralSolution& s, const Field& exact) {
    ErrorNorms out;
    constexpr int kGrid = 1001;
    for (int k = 0; k < kGrid; ++k) {
        const double x = k == kGrid - 1 ? s.T : s.T * k / (kGrid - 1);
        out.linf = std::max(out.linf, std::abs(eval_solution(s, x) - exact(x)));
    }
    const auto rule = gauss_legendre(2 * s.N + 16);
    double sum = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
        const double x = from_lambda(rule.nodes[j], s.T);
        const double e = eval_solution(s, x) - exact(x);
        sum += rule.weights[j] * e * e;
    }
    out.l2 = std::sqrt(0.5 * s.T * sum);
    return out;
}

ConvergenceReport convergence_study(const ProblemSpec& p, std::vector<int> Ns) {
    if (!p.exact) {
        throw ParameterError("convergence_study needs a problem with an exact solution");
    }
    p.validate();
    std::sort(Ns.begin(), Ns.end());
    if (std::adjacent_find(Ns.begin(), Ns.end()) != Ns.end()) {
        throw ParameterError("convergence_study: N values must be distinct");
    }
    if (!Ns.empty() && Ns.front() < 1) {
        throw ParameterError("convergence_study: every N must be at least 1");
    }

    std::vector<std::future<ConvergenceRecord>> pending;
    pending.reserve(Ns.size());
    for (int N : Ns) {
        pending.push_back(std::async(std::launch::async, [&p, N] {
            ConvergenceRecord rec;
            rec.N = N;
            try {
                const auto sol = solve(p, N);
                const auto norms = error_norms(sol, *p.exact);
                rec.l2_error = norms.l2;
                rec.linf_error = norms.linf;
                rec.condition_estimate = sol.condition_estimate.value_or(0.0);
            } catch (const Error& e) {
                rec.l2_error = rec.linf_error = rec.condition_estimate = std::nan("");
                rec.failure = e.what();
            }
            return rec;
        }));
    }

    ConvergenceReport report;
    report.problem = p.name;
    for (auto& f : pending) {
        report.records.push_back(f.get());
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (const auto& r : report.records) {
        if (r.failure || !(r.l2_error > kSlopeFloor)) {
            continue;
        }
        const double x = r.N, y = std::log10(r.l2_error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count >= 2) {
        report.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    }
    return report;
}

} // namespace fracol
