#ifndef FRACOLLOC_ORACLE_HPP
#define FRACOLLOC_ORACLE_HPP

#include <functional>
#include <stdexcept>

namespace fracolloc::oracle {

/// Independent ground-truth values of the left Riemann-Liouville derivative
/// on [-1,1] for validating the collocation pipeline. Nothing in here touches
/// the basis-coefficient or matrix-assembly code paths; the quadrature route
/// even computes the outer d/dx numerically so that its structure shares
/// nothing with the library's analytic differentiation.

enum class Method { analytic_monomial, askey_closed_form, singular_quadrature };

struct Result {
    double value = 0.0;
    Method method = Method::analytic_monomial;
    double est_error = 0.0;  // 0 for the analytic routes
};

/// Adaptive quadrature failed to converge within the depth budget; `best`
/// carries the value reached.
struct tolerance_error : std::runtime_error {
    Result best;
    tolerance_error(const std::string& what, Result b)
        : std::runtime_error(what), best(b) {}
};

/// D^sigma (1+x)^p = Gamma(p+1)/Gamma(p+1-sigma) (1+x)^{p-sigma}, p > -1.
/// Orders in (0,1) and (1,2) are accepted; a Gamma pole in the denominator
/// annihilates the result (the constant-direction kernel).
Result rl_monomial(double p, double sigma, double x);

/// Closed form of D^{1-mu} applied to the weighted Jacobi function
/// (1+x)^{-mu} (P_n^{mu,-mu}(x) - P_n^{mu,-mu}(-1)):
/// Gamma(n-mu+1)/n! P_n'(x), with P_n the Legendre polynomial.
Result rl_weighted_jacobi(int n, double mu, double x);

/// Brute-force evaluation of D^sigma f at x in (-1,1) for smooth f with
/// f(-1) = 0: the substitution s = x - t^{1/(1-sigma)} removes the kernel
/// singularity, adaptive Simpson integrates, and the outer d/dx is a 5-point
/// stencil with Richardson extrapolation over shrinking steps. `est_error`
/// comes from successive refinement.
Result rl_quadrature(const std::function<double(double)>& f, double sigma, double x);

/// Relative residual of the weighted-Jacobi integral identity
///   const * int_{-1}^x (1+s)^{-mu} P_n^{mu,-mu}(s) (x-s)^{mu-1} ds = P_n(x)
/// under direct singular-substitution quadrature (both endpoint
/// singularities removed by power substitutions).
double askey_identity_residual(int n, double mu, double x);

}  // namespace fracolloc::oracle

#endif
