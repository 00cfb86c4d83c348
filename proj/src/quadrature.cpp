#include "fracol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "fracol/error.hpp"
#include "fracol/orthopoly.hpp"

namespace fracol {

namespace {

void check_jacobi_params(double q1, double q2) {
    if (!(q1 > -1.0) || !(q2 > -1.0)) {
        throw ParameterError("Jacobi parameters must satisfy q1 > -1 and q2 > -1");
    }
}

// Rules keyed by family, size and the q-parameters at 1e-14 granularity.
using RuleKey = std::tuple<int, int, std::int64_t, std::int64_t>;

class RuleCache {
public:
    template <typename Compute>
    std::shared_ptr<const QuadratureRule> get(const RuleKey& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = rules_.find(key); it != rules_.end()) {
                return it->second;
            }
        }
        auto rule = std::make_shared<const QuadratureRule>(compute());
        std::unique_lock lock(mutex_);
        // First insertion wins; a racing duplicate computation is discarded.
        auto [it, inserted] = rules_.try_emplace(key, std::move(rule));
        return it->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return rules_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<RuleKey, std::shared_ptr<const QuadratureRule>> rules_;
};

RuleCache& cache() {
    static RuleCache instance;
    return instance;
}

std::int64_t q_key(double q) {
    return static_cast<std::int64_t>(std::llround(q * 1e14));
}

QuadratureRule compute_gauss_jacobi(int n, double q1, double q2) {
    std::vector<double> diag(n), offdiag(n > 0 ? n - 1 : 0);
    double beta0 = 0.0;
    for (int k = 0; k < n; ++k) {
        auto [a, b] = jacobi_recurrence(q1, q2, k);
        diag[k] = a;
        if (k == 0) {
            beta0 = b;
        } else {
            offdiag[k - 1] = std::sqrt(b);
        }
    }
    auto eig = symmetric_tridiagonal_eigen(diag, offdiag);

    QuadratureRule rule;
    rule.family = RuleFamily::GaussJacobi;
    rule.q1 = q1;
    rule.q2 = q2;
    rule.nodes = std::move(eig.values);
    rule.weights.resize(n);
    for (int j = 0; j < n; ++j) {
        const double v = eig.first_components[j];
        rule.weights[j] = beta0 * v * v;
    }
    if (q1 == q2) {
        // Symmetric weight: enforce exact node antisymmetry and weight symmetry.
        for (int j = 0; j < n / 2; ++j) {
            const double x = 0.5 * (rule.nodes[n - 1 - j] - rule.nodes[j]);
            const double w = 0.5 * (rule.weights[n - 1 - j] + rule.weights[j]);
            rule.nodes[j] = -x;
            rule.nodes[n - 1 - j] = x;
            rule.weights[j] = rule.weights[n - 1 - j] = w;
        }
        if (n % 2 == 1) {
            rule.nodes[n / 2] = 0.0;
        }
    }
    return rule;
}

// Root of L'_N inside (lo, hi), where L'_N changes sign exactly once.
// Newton runs on q(x) = L_{N−1}(x) − x·L_N(x) = (1−x²)L'_N(x)/N, which has
// the same interior roots and sign, stays O(1) in magnitude, and by the
// Legendre equation has q'(x) = −(N+1)·L_N(x).
double lgl_interior_root(int N, double lo, double hi, double guess) {
    auto q_and_slope = [N](double x) {
        const auto L = legendre_eval_all(N, x);
        return std::pair{L[N - 1] - x * L[N], -(N + 1.0) * L[N]};
    };
    const bool lo_negative = q_and_slope(lo).first < 0.0;
    double x = guess;
    for (int iter = 0; iter < 100; ++iter) {
        const auto [q, slope] = q_and_slope(x);
        if (q == 0.0) {
            return x;
        }
        if ((q < 0.0) == lo_negative) {
            lo = x;
        } else {
            hi = x;
        }
        double next = x - q / slope;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 1e-14 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-15) {
            // Polish with plain Newton; the bracket has served its purpose.
            for (int k = 0; k < 2; ++k) {
                const auto [q2, s2] = q_and_slope(next);
                next -= q2 / s2;
            }
            return next;
        }
        x = next;
    }
    throw ConvergenceError("gauss_lobatto_legendre: Newton iteration for node of L'_" + std::to_string(N) +
                           " did not converge in 100 steps");
}

QuadratureRule compute_lgl(int N) {
    QuadratureRule rule;
    rule.family = RuleFamily::GaussLobattoLegendre;
    rule.nodes.assign(static_cast<std::size_t>(N) + 1, 0.0);
    rule.nodes.front() = -1.0;
    rule.nodes.back() = 1.0;
    if (N >= 2) {
        // Zeros of L'_N interlace the zeros of L_N.
        const auto gl = gauss_legendre(N);
        for (int k = 0; k + 1 < N; ++k) {
            const double lo = gl.nodes[k], hi = gl.nodes[k + 1];
            const double guess = -std::cos(M_PI * (k + 1) / N);
            const double start = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
            rule.nodes[k + 1] = lgl_interior_root(N, lo, hi, start);
        }
        for (int j = 1; j <= N / 2; ++j) {
            const double x = 0.5 * (rule.nodes[N - j] - rule.nodes[j]);
            rule.nodes[j] = -x;
            rule.nodes[N - j] = x;
        }
        if (N % 2 == 0) {
            rule.nodes[N / 2] = 0.0;
        }
    }
    rule.weights.resize(rule.nodes.size());
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double L = legendre_eval(N, rule.nodes[j]);
        rule.weights[j] = 2.0 / (N * (N + 1.0) * L * L);
    }
    return rule;
}

} // namespace

double jacobi_zeroth_moment(double q1, double q2) {
    check_jacobi_params(q1, q2);
    return std::exp((q1 + q2 + 1.0) * std::log(2.0) + std::lgamma(q1 + 1.0) + std::lgamma(q2 + 1.0) -
                    std::lgamma(q1 + q2 + 2.0));
}

std::pair<double, double> jacobi_recurrence(double q1, double q2, int k) {
    check_jacobi_params(q1, q2);
    if (k < 0) {
        throw ParameterError("jacobi_recurrence: negative index");
    }
    const double ab = q1 + q2;
    const double s = 2.0 * k + ab;
    double alpha = 0.0;
    if (k == 0) {
        alpha = (q2 - q1) / (ab + 2.0);
    } else {
        alpha = (q2 * q2 - q1 * q1) / (s * (s + 2.0));
    }
    double beta = 0.0;
    if (k == 0) {
        beta = jacobi_zeroth_moment(q1, q2);
    } else if (k == 1) {
        // (k+q1+q2)/(2k+q1+q2-1) cancels to 1; avoids 0/0 on q1+q2 = -1.
        beta = 4.0 * (1.0 + q1) * (1.0 + q2) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
        beta = 4.0 * k * (k + q1) * (k + q2) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    return {alpha, beta};
}

TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag, std::span<const double> offdiag) {
    const std::size_t n = diag.size();
    if (n == 0 || offdiag.size() + 1 != n) {
        throw SizeMismatchError("symmetric_tridiagonal_eigen: need n diagonal and n-1 off-diagonal entries");
    }
    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(n, 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin());
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_iter = 60;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++iter > max_iter) {
                throw ConvergenceError("symmetric_tridiagonal_eigen: QL iteration did not converge");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                const double zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    TridiagonalEigen out;
    out.values.reserve(n);
    out.first_components.reserve(n);
    for (std::size_t idx : order) {
        out.values.push_back(d[idx]);
        out.first_components.push_back(z[idx]);
    }
    return out;
}

QuadratureRule gauss_jacobi(int n, double q1, double q2) {
    check_jacobi_params(q1, q2);
    if (n < 1) {
        throw ParameterError("gauss_jacobi: need at least one point");
    }
    const RuleKey key{static_cast<int>(RuleFamily::GaussJacobi), n, q_key(q1), q_key(q2)};
    return *cache().get(key, [&] { return compute_gauss_jacobi(n, q1, q2); });
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) {
        throw ParameterError("gauss_legendre: need at least one point");
    }
    const RuleKey key{static_cast<int>(RuleFamily::GaussLegendre), n, 0, 0};
    return *cache().get(key, [&] {
        auto rule = compute_gauss_jacobi(n, 0.0, 0.0);
        rule.family = RuleFamily::GaussLegendre;
        return rule;
    });
}

QuadratureRule gauss_lobatto_legendre(int N) {
    if (N < 1) {
        throw ParameterError("gauss_lobatto_legendre: need N >= 1");
    }
    const RuleKey key{static_cast<int>(RuleFamily::GaussLobattoLegendre), N, 0, 0};
    return *cache().get(key, [&] { return compute_lgl(N); });
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& g) {
    double sum = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
        sum += g(rule.nodes[j]) * rule.weights[j];
    }
    return sum;
}

std::size_t rule_cache_size() {
    return cache().size();
}

} // namespace fracol
