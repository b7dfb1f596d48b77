#include "fracolloc/jacobi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracolloc {

void JacobiParams::validate() const {
    if (n < 0)
        throw std::invalid_argument("jacobi: degree must be nonnegative, got n=" + std::to_string(n));
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::invalid_argument("jacobi: alpha and beta must exceed -1");
    if (alpha > 3.0 || beta > 3.0)
        throw std::invalid_argument("jacobi: alpha, beta > 3 is outside the supported range");
}

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: pole at nonpositive integer " + std::to_string(x));

    // Lanczos, g = 7, 9 coefficients (Godfrey).
    static const double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,     12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6,  1.5056327351493116e-7};
    static const double pi = 3.14159265358979323846;

    if (x < 0.5)
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));

    const double z = x - 1.0;
    double s = coef[0];
    for (int i = 1; i < 9; ++i) s += coef[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

double gamma_ratio_n_mu(int n, double mu) {
    if (n < 0) throw std::invalid_argument("gamma_ratio_n_mu: n must be nonnegative");
    double r = gamma_fn(1.0 - mu);
    for (int k = 1; k <= n; ++k) r *= (k - mu) / k;
    return r;
}

namespace detail {

double jacobi_eval_unchecked(int n, double alpha, double beta, double x) {
    if (n == 0) return 1.0;
    const double p1 = 0.5 * (alpha + beta + 2.0) * x + 0.5 * (alpha - beta);
    if (n == 1) return p1;

    // P_k = (a_k x + b_k) P_{k-1} + c_k P_{k-2}
    double pm2 = 1.0, pm1 = p1;
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + alpha + beta;
        const double den = 2.0 * k * (k + alpha + beta) * (s - 2.0);
        const double ak = s * (s - 1.0) * (s - 2.0) / den;
        const double bk = (alpha * alpha - beta * beta) * (s - 1.0) / den;
        const double ck = -2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s / den;
        const double pk = (ak * x + bk) * pm1 + ck * pm2;
        pm2 = pm1;
        pm1 = pk;
    }
    return pm1;
}

}  // namespace detail

double jacobi_eval(const JacobiParams& p, double x) {
    p.validate();
    if (std::abs(x) > 1.0 + 1e-8)
        throw std::domain_error("jacobi_eval: x outside [-1-1e-8, 1+1e-8]");
    return detail::jacobi_eval_unchecked(p.n, p.alpha, p.beta, x);
}

double jacobi_deriv(const JacobiParams& p, double x, int order) {
    p.validate();
    if (order != 1 && order != 2)
        throw std::invalid_argument("jacobi_deriv: order must be 1 or 2");
    if (std::abs(x) > 1.0 + 1e-8)
        throw std::domain_error("jacobi_deriv: x outside [-1-1e-8, 1+1e-8]");
    if (p.n < order) return 0.0;

    const double s = p.n + p.alpha + p.beta + 1.0;
    if (order == 1)
        return 0.5 * s * detail::jacobi_eval_unchecked(p.n - 1, p.alpha + 1.0, p.beta + 1.0, x);
    return 0.25 * s * (s + 1.0) *
           detail::jacobi_eval_unchecked(p.n - 2, p.alpha + 2.0, p.beta + 2.0, x);
}

double jacobi_at_minus_one(const JacobiParams& p) {
    p.validate();
    double r = (p.n % 2 == 0) ? 1.0 : -1.0;
    for (int k = 1; k <= p.n; ++k) r *= (k + p.beta) / k;
    return r;
}

double jacobi_at_plus_one(const JacobiParams& p) {
    p.validate();
    double r = 1.0;
    for (int k = 1; k <= p.n; ++k) r *= (k + p.alpha) / k;
    return r;
}

double jacobi_norm_sq(const JacobiParams& p) {
    p.validate();
    const double a = p.alpha, b = p.beta;
    if (p.n == 0)
        return std::pow(2.0, a + b + 1.0) * gamma_fn(a + 1.0) * gamma_fn(b + 1.0) /
               gamma_fn(a + b + 2.0);
    const double lg = std::lgamma(p.n + a + 1.0) + std::lgamma(p.n + b + 1.0) -
                      std::lgamma(p.n + 1.0) - std::lgamma(p.n + a + b + 1.0);
    return std::pow(2.0, a + b + 1.0) / (2.0 * p.n + a + b + 1.0) * std::exp(lg);
}

}  // namespace fracolloc
