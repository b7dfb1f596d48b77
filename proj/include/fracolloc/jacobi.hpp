#ifndef FRACOLLOC_JACOBI_HPP
#define FRACOLLOC_JACOBI_HPP

namespace fracolloc {

/// Identifies one Jacobi polynomial P_n^{alpha,beta}.
///
/// The weight (1-x)^alpha (1+x)^beta is integrable only for alpha,beta > -1;
/// the public API additionally restricts alpha,beta <= 3, the range exercised
/// and tested by this library.
struct JacobiParams {
    int n;
    double alpha;
    double beta;

    void validate() const;
};

/// Euler gamma function, Lanczos approximation (g=7, 9 terms).
/// Accurate to >= 13 significant digits on (0, 50]; reflection formula for
/// arguments below 1/2. Throws std::domain_error at nonpositive integers.
double gamma_fn(double x);

/// Gamma(n - mu + 1) / n! evaluated as Gamma(1-mu) * prod_{k=1..n} (k-mu)/k.
/// All factors are O(1), so the ratio stays representable for any practical n.
double gamma_ratio_n_mu(int n, double mu);

/// P_n^{alpha,beta}(x) by the forward three-term recurrence.
/// x may exceed [-1,1] by at most 1e-8 (root bracketing headroom).
double jacobi_eval(const JacobiParams& p, double x);

/// Derivative of order 1 or 2 of P_n^{alpha,beta}: each differentiation maps
/// onto the (alpha+1, beta+1) family with factor (n+alpha+beta+1)/2.
/// Returns 0 when order exceeds the degree.
double jacobi_deriv(const JacobiParams& p, double x, int order);

/// P_n^{alpha,beta}(-1) = (-1)^n Gamma(n+beta+1) / (n! Gamma(beta+1)),
/// computed as a product of O(1) factors.
double jacobi_at_minus_one(const JacobiParams& p);

/// P_n^{alpha,beta}(+1) = Gamma(n+alpha+1) / (n! Gamma(alpha+1)).
double jacobi_at_plus_one(const JacobiParams& p);

/// Squared weighted L2 norm of P_n^{alpha,beta}. The closed form holds for
/// n >= 1; the n = 0 moment is the Beta-function integral of the weight.
double jacobi_norm_sq(const JacobiParams& p);

namespace detail {
/// Recurrence evaluation without the public-range parameter check; used for
/// the internally raised (alpha+k, beta+k) families of derivative formulas.
double jacobi_eval_unchecked(int n, double alpha, double beta, double x);
}  // namespace detail

}  // namespace fracolloc

#endif
