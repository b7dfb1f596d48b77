#include "fracolloc/grids.hpp"

#include <algorithm>
#include <cmath>

#include "fracolloc/jacobi.hpp"

namespace fracolloc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bisection-safeguarded Newton on a bracket with f(lo)*f(hi) < 0.
// Converges when the step (or bracket) drops below 1e-14.
template <typename F, typename DF>
double newton_bisect(F f, DF df, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw bracketing_error("newton_bisect: no sign change on [" + std::to_string(lo) +
                               ", " + std::to_string(hi) + "]");
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (flo * fx < 0.0)
            hi = x;
        else {
            lo = x;
            flo = fx;
        }
        const double d = df(x);
        double xn = x - fx / d;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // Newton left the bracket
        const double step = std::abs(xn - x);
        x = xn;
        if (step <= 1e-15 * std::max(1.0, std::abs(x)) || hi - lo <= 4e-16) {
            // one unguarded polish step squares the remaining error
            const double dd = df(x);
            if (dd != 0.0) {
                const double xp = x - f(x) / dd;
                if (xp > lo && xp < hi) x = xp;
            }
            return x;
        }
    }
    return x;
}

}  // namespace

void Grid::validate() const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] < -1.0 || nodes[i] > 1.0)
            throw std::invalid_argument("grid: node outside [-1,1]");
        if (i > 0 && nodes[i] - nodes[i - 1] < 1e-12)
            throw std::invalid_argument("grid: nodes not strictly increasing (gap < 1e-12)");
    }
}

Grid make_grid(std::vector<double> nodes, GridRole role, GridFamily family) {
    Grid g{std::move(nodes), role, family};
    g.validate();
    return g;
}

Grid chebyshev_lobatto(int N) {
    if (N < 2) throw std::invalid_argument("chebyshev_lobatto: N must be >= 2");
    std::vector<double> x(N + 1);
    for (int j = 0; j <= N; ++j) x[j] = -std::cos(j * kPi / N);
    x[0] = -1.0;
    x[N] = 1.0;
    if (N % 2 == 0) x[N / 2] = 0.0;
    return make_grid(std::move(x), GridRole::representation,
                     {NodeFamilyKind::chebyshev_lobatto});
}

std::vector<double> jacobi_polynomial_zeros(int n, double alpha, double beta) {
    JacobiParams{n, alpha, beta}.validate();
    // Degree-ascending construction: the zeros of P_{m-1} together with the
    // endpoints bracket exactly one zero of P_m in each interval.
    std::vector<double> zeros;
    for (int m = 1; m <= n; ++m) {
        std::vector<double> brackets;
        brackets.reserve(zeros.size() + 2);
        brackets.push_back(-1.0);
        brackets.insert(brackets.end(), zeros.begin(), zeros.end());
        brackets.push_back(1.0);

        auto f = [&](double x) { return detail::jacobi_eval_unchecked(m, alpha, beta, x); };
        auto df = [&](double x) {
            return 0.5 * (m + alpha + beta + 1.0) *
                   detail::jacobi_eval_unchecked(m - 1, alpha + 1.0, beta + 1.0, x);
        };

        std::vector<double> next;
        next.reserve(m);
        for (std::size_t i = 0; i + 1 < brackets.size(); ++i)
            next.push_back(newton_bisect(f, df, brackets[i], brackets[i + 1]));
        if (static_cast<int>(next.size()) != m)
            throw bracketing_error("jacobi_polynomial_zeros: lost a root at degree " +
                                   std::to_string(m));
        zeros = std::move(next);
    }
    return zeros;
}

Grid jacobi_deriv_zeros(int N, double alpha, double beta, bool with_endpoints) {
    if (N < 2) throw std::invalid_argument("jacobi_deriv_zeros: N must be >= 2");
    // d/dx P_N^{a,b} is proportional to P_{N-1}^{a+1,b+1}.
    std::vector<double> z = jacobi_polynomial_zeros(N - 1, alpha + 1.0, beta + 1.0);
    if (static_cast<int>(z.size()) != N - 1)
        throw bracketing_error("jacobi_deriv_zeros: expected " + std::to_string(N - 1) +
                               " roots, found " + std::to_string(z.size()));
    if (with_endpoints) {
        z.insert(z.begin(), -1.0);
        z.push_back(1.0);
    }
    return make_grid(std::move(z), GridRole::representation, {NodeFamilyKind::custom});
}

Grid legendre_zeros(int N) {
    if (N < 1) throw std::invalid_argument("legendre_zeros: N must be >= 1");
    std::vector<double> z = jacobi_polynomial_zeros(N, 0.0, 0.0);
    if (N % 2 == 1) z[N / 2] = 0.0;  // odd degree: middle zero is exact
    return make_grid(std::move(z), GridRole::collocation, {NodeFamilyKind::legendre_zeros});
}

Grid mu_lobatto_grid(int N, double mu, bool with_endpoints) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("mu_lobatto_grid: mu must lie in (0,1)");
    Grid g = jacobi_deriv_zeros(N, mu, -mu, with_endpoints);
    g.family = GridFamily{NodeFamilyKind::jacobi_mu_lobatto, mu};
    return g;
}

QuadratureRule gauss_lobatto_weights(int N, double mu) {
    if (N < 2) throw std::invalid_argument("gauss_lobatto_weights: N must be >= 2");
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("gauss_lobatto_weights: mu must lie in (0,1)");

    Grid nodes = mu_lobatto_grid(N, mu, true);  // N+1 nodes including +-1
    std::vector<double> w(N + 1, 0.0);

    // 2 Gamma(N+mu) Gamma(N-mu) / ((N+1) ((N-1)!)^2), overflow-safe product form.
    double fac = 2.0 * gamma_fn(1.0 + mu) * gamma_fn(1.0 - mu) / (N + 1.0);
    for (int k = 1; k <= N - 1; ++k) fac *= (k * k - mu * mu) / (static_cast<double>(k) * k);

    const JacobiParams pN{N, mu, -mu};
    const JacobiParams pNm1{N - 1, mu, -mu};
    for (int m = 1; m <= N - 1; ++m) {
        const double x = nodes.nodes[m];
        const double den = jacobi_eval(pN, x) * jacobi_deriv(pNm1, x, 1);
        if (std::abs(den) < 1e-300)
            throw std::runtime_error("gauss_lobatto_weights: degenerate node at x=" +
                                     std::to_string(x));
        w[m] = -fac / den;
    }

    // Endpoint weights from exactness on 1 and x. Moments of (1-x)^mu (1+x)^{-mu}:
    // integral of 1 is 2 Gamma(1-mu) Gamma(1+mu); integral of x is -mu times that.
    const double m0 = 2.0 * gamma_fn(1.0 - mu) * gamma_fn(1.0 + mu);
    const double m1 = -mu * m0;
    double s0 = 0.0, s1 = 0.0;
    for (int m = 1; m <= N - 1; ++m) {
        s0 += w[m];
        s1 += w[m] * nodes.nodes[m];
    }
    w[N] = 0.5 * ((m0 - s0) + (m1 - s1));
    w[0] = 0.5 * ((m0 - s0) - (m1 - s1));

    return QuadratureRule{std::move(nodes), std::move(w)};
}

}  // namespace fracolloc
