#include "fracol/orthopoly.hpp"

#include <cmath>
#include <string>

#include "fracol/error.hpp"

namespace fracol {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_on_lambda(double x, const char* who) {
    if (!(std::abs(x) <= 1.0 + kDomainSlack)) {
        throw DomainError(std::string(who) + ": x = " + std::to_string(x) + " lies outside [-1,1]");
    }
}

void check_jacobi_params(double q1, double q2) {
    if (!(q1 > -1.0) || !(q2 > -1.0)) {
        throw ParameterError("Jacobi parameters must satisfy q1 > -1 and q2 > -1");
    }
}

} // namespace

LegendreSeries::LegendreSeries(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw ParameterError("LegendreSeries needs at least one coefficient");
    }
    for (double c : coefficients_) {
        if (!std::isfinite(c)) {
            throw ParameterError("LegendreSeries coefficient is not finite");
        }
    }
}

std::vector<double> legendre_eval_all(int N, double x) {
    if (N < 0) {
        throw ParameterError("legendre_eval_all: negative degree");
    }
    check_on_lambda(x, "legendre_eval_all");
    std::vector<double> L(static_cast<std::size_t>(N) + 1);
    L[0] = 1.0;
    if (N >= 1) {
        L[1] = x;
    }
    for (int i = 1; i < N; ++i) {
        L[i + 1] = ((2.0 * i + 1.0) * x * L[i] - i * L[i - 1]) / (i + 1.0);
    }
    return L;
}

double legendre_eval(int n, double x) {
    return legendre_eval_all(n, x).back();
}

double legendre_deriv(int n, double x) {
    if (n < 0) {
        throw ParameterError("legendre_deriv: negative degree");
    }
    check_on_lambda(x, "legendre_deriv");
    // L'_{i+1} = L'_{i-1} + (2i+1) L_i, carried alongside the value recurrence.
    double p_prev = 1.0, p = x;
    double d_prev = 0.0, d = 1.0;
    if (n == 0) {
        return 0.0;
    }
    for (int i = 1; i < n; ++i) {
        const double p_next = ((2.0 * i + 1.0) * x * p - i * p_prev) / (i + 1.0);
        const double d_next = d_prev + (2.0 * i + 1.0) * p;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    return d;
}

double jacobi_eval(double q1, double q2, int n, double x) {
    check_jacobi_params(q1, q2);
    if (n < 0) {
        throw ParameterError("jacobi_eval: negative degree");
    }
    check_on_lambda(x, "jacobi_eval");
    if (n == 0) {
        return 1.0;
    }
    const double ab = q1 + q2;
    double prev = 1.0;
    double cur = 0.5 * (ab + 2.0) * x + 0.5 * (q1 - q2);
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + ab;
        const double a1 = 2.0 * k * (k + ab) * (s - 2.0);
        const double a2 = (s - 1.0) * (q1 * q1 - q2 * q2);
        const double a3 = (s - 2.0) * (s - 1.0) * s;
        const double a4 = 2.0 * (k + q1 - 1.0) * (k + q2 - 1.0) * s;
        const double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    return cur;
}

double jacobi_norm(double q1, double q2, int n) {
    check_jacobi_params(q1, q2);
    if (n < 0) {
        throw ParameterError("jacobi_norm: negative degree");
    }
    const double ab = q1 + q2;
    if (n == 0) {
        return std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(q1 + 1.0) + std::lgamma(q2 + 1.0) -
                        std::lgamma(ab + 2.0));
    }
    const double log_num = (ab + 1.0) * std::log(2.0) + std::lgamma(n + q1 + 1.0) + std::lgamma(n + q2 + 1.0);
    const double log_den = std::lgamma(n + 1.0) + std::lgamma(n + ab + 1.0);
    return std::exp(log_num - log_den) / (2.0 * n + ab + 1.0);
}

double lgl_discrete_norm(int i, int N) {
    return i < N ? 2.0 / (2.0 * i + 1.0) : 2.0 / N;
}

LegendreSeries nodal_to_modal(std::span<const double> values, const QuadratureRule& rule) {
    if (rule.family != RuleFamily::GaussLobattoLegendre) {
        throw ParameterError("nodal_to_modal requires a Legendre-Gauss-Lobatto rule");
    }
    if (values.size() != rule.size()) {
        throw SizeMismatchError("nodal_to_modal: " + std::to_string(values.size()) + " values for " +
                                std::to_string(rule.size()) + " nodes");
    }
    const int N = static_cast<int>(rule.size()) - 1;
    std::vector<double> coeffs(rule.size(), 0.0);
    for (std::size_t j = 0; j < rule.size(); ++j) {
        const auto L = legendre_eval_all(N, rule.nodes[j]);
        const double vw = values[j] * rule.weights[j];
        for (int i = 0; i <= N; ++i) {
            coeffs[i] += vw * L[i];
        }
    }
    for (int i = 0; i <= N; ++i) {
        coeffs[i] /= lgl_discrete_norm(i, N);
    }
    return LegendreSeries(std::move(coeffs));
}

double series_eval(const LegendreSeries& series, double x) {
    const auto L = legendre_eval_all(series.degree(), x);
    const auto& u = series.coefficients();
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += u[i] * L[i];
    }
    return sum;
}

} // namespace fracol
