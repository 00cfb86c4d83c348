#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace fracol {

enum class RuleFamily { GaussLegendre, GaussLobattoLegendre, GaussJacobi };

/// Node/weight pair on Λ = [−1,1].  For the Gauss–Jacobi family the weight
/// function (1−x)^q1 (1+x)^q2 is folded into the weights, so integrate()
/// only ever sees the smooth factor of the integrand.
struct QuadratureRule {
    RuleFamily family = RuleFamily::GaussLegendre;
    double q1 = 0.0;
    double q2 = 0.0;
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // all positive

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Monic three-term recurrence coefficients (α_k, β_k) of the Jacobi weight;
/// β_0 is the zeroth moment.
std::pair<double, double> jacobi_recurrence(double q1, double q2, int k);

/// ∫_{−1}^{1} (1−x)^q1 (1+x)^q2 dx.
double jacobi_zeroth_moment(double q1, double q2);

/// n-point Gauss–Jacobi rule (Golub–Welsch), exact to degree 2n−1.
QuadratureRule gauss_jacobi(int n, double q1, double q2);

/// n-point Gauss–Legendre rule.
QuadratureRule gauss_legendre(int n);

/// (N+1)-point Legendre–Gauss–Lobatto rule: ±1 plus the roots of L'_N.
QuadratureRule gauss_lobatto_legendre(int N);

double integrate(const QuadratureRule& rule, const std::function<double(double)>& g);

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector, sorted by eigenvalue.
/// `diag` has n entries, `offdiag` n−1.  Implicit-shift QL.
struct TridiagonalEigen {
    std::vector<double> values;
    std::vector<double> first_components;
};
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diag,
                                             std::span<const double> offdiag);

/// Number of rules currently held by the process-wide rule cache.
std::size_t rule_cache_size();

} // namespace fracol
