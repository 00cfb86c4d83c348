#pragma once

#include <functional>
#include <span>

namespace fracol {

/// Γ(x) for x not a non-positive integer (Lanczos, g = 7, with reflection
/// below 1/2).  Relative accuracy about 1e-14 on (0, 50].
double gamma_fn(double x);

/// Complementary error function erfc(x) = (2/√π) ∫_x^∞ e^{−s²} ds.
double erfc(double x);

/// c·x^ν with ν > −1; the closed-form Riemann–Liouville integral maps it to
/// another monomial.
struct MonomialTerm {
    double coefficient = 1.0;
    double exponent = 0.0;
};

/// I^α x^ν = Γ(ν+1)/Γ(α+ν+1) x^{α+ν}; the identity when α = 0.
double rl_monomial(double alpha, double nu, double x);

/// The monomial that I^α maps `term` to.
MonomialTerm rl_monomial_term(double alpha, const MonomialTerm& term);

/// Closed-form I^α of Σ c_k x^{ν_k}.
double rl_poly(double alpha, std::span<const MonomialTerm> terms, double x);

/// (1/Γ(α)) ∫_0^x (x−s)^{α−1} f(s) ds by Gauss–Jacobi(α−1, 0) rules of
/// doubling size (8, 16, ..., 512) until two successive results agree
/// within `tol`.  Accepts α in (0, 1].  Throws ConvergenceError when 512
/// points are not enough.
double rl_numeric(double alpha, const std::function<double(double)>& f, double x, double tol);

} // namespace fracol
