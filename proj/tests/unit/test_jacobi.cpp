#include <doctest.h>

#include <cmath>
#include <random>

#include "fracolloc/grids.hpp"
#include "fracolloc/jacobi.hpp"

using namespace fracolloc;

namespace {

// Weighted integral of f against (1-x)^mu (1+x)^{-mu} via the Gauss-Lobatto
// rule; exact for polynomial f of degree <= 2N-1.
template <typename F>
double gl_integrate(const QuadratureRule& rule, F f) {
    double s = 0.0;
    for (int m = 0; m < rule.nodes.size(); ++m)
        s += rule.weights[m] * f(rule.nodes.nodes[m]);
    return s;
}

}  // namespace

TEST_SUITE("jacobi") {

TEST_CASE("degree zero and one") {
    CHECK(jacobi_eval({0, 0.7, -0.2}, 0.3) == 1.0);
    // P_1 = (alpha+beta+2)/2 x + (alpha-beta)/2 = x + 1/2 at (1/2, -1/2)
    const double x0 = 0.42;
    CHECK(jacobi_eval({1, 0.5, -0.5}, x0) == doctest::Approx(x0 + 0.5).epsilon(1e-15));
}

TEST_CASE("legendre endpoint parity") {
    CHECK(jacobi_eval({7, 0.0, 0.0}, -1.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(jacobi_eval({8, 0.0, 0.0}, -1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("chebyshev trigonometric identity") {
    // T_n(cos t) = cos(n t); T_n = (n! 2^n)^2/(2n)! P_n^{-1/2,-1/2}
    const int n = 5;
    const double t = 0.4;
    double scale = 1.0;  // (2n)! / (n! 2^n)^2
    for (int k = 1; k <= n; ++k) scale *= (n + k) / (4.0 * k);
    const double got = jacobi_eval({n, -0.5, -0.5}, std::cos(t));
    CHECK(got == doctest::Approx(scale * std::cos(n * t)).epsilon(1e-13));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(jacobi_eval({3, -1.0, 0.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eval({3, 0.0, -1.2}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eval({-1, 0.0, 0.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eval({3, 3.5, 0.0}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_eval({3, 0.0, 0.0}, 1.1), std::domain_error);
    CHECK_NOTHROW(jacobi_eval({3, 0.0, 0.0}, 1.0 + 5e-9));
}

TEST_CASE("derivative basics") {
    CHECK(jacobi_deriv({0, 0.3, 0.3}, 0.1, 1) == 0.0);
    CHECK(jacobi_deriv({1, 0.3, 0.3}, 0.1, 2) == 0.0);

    // d/dx P_N^{mu,-mu} = (N+1)/2 P_{N-1}^{1+mu,1-mu}
    const int N = 6;
    const double mu = 0.3;
    for (double x : {-0.8, 0.0, 0.9}) {
        const double lhs = jacobi_deriv({N, mu, -mu}, x, 1);
        const double rhs = 0.5 * (N + 1) * jacobi_eval({N - 1, 1.0 + mu, 1.0 - mu}, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    }
}

TEST_CASE("derivative matches central differences") {
    const double h = 1e-5;
    for (int n : {2, 6, 13, 20}) {
        for (double x : {-0.7, 0.2, 0.6}) {
            const JacobiParams p{n, 0.0, 0.0};
            const double fd = (jacobi_eval(p, x + h) - jacobi_eval(p, x - h)) / (2.0 * h);
            CHECK(jacobi_deriv(p, x, 1) == doctest::Approx(fd).epsilon(0).scale(1).epsilon(1e-6));
        }
    }
    const JacobiParams p6{6, 0.0, 0.0};
    const double fd = (jacobi_eval(p6, 0.2 + h) - jacobi_eval(p6, 0.2 - h)) / (2.0 * h);
    CHECK(std::abs(jacobi_deriv(p6, 0.2, 1) - fd) < 1e-6);
}

TEST_CASE("value at -1") {
    CHECK(jacobi_at_minus_one({3, 0.7, 0.0}) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(jacobi_at_minus_one({2, 0.5, -0.5}) == doctest::Approx(0.375).epsilon(1e-14));

    // consistency with the recurrence at the endpoint, n <= 50
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ab(-0.9, 2.0);
    for (int rep = 0; rep < 20; ++rep) {
        const JacobiParams p{static_cast<int>(rng() % 51), ab(rng), ab(rng)};
        const double closed = jacobi_at_minus_one(p);
        const double rec = jacobi_eval(p, -1.0);
        CHECK(std::abs(closed - rec) <= 1e-11 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("norms") {
    CHECK(jacobi_norm_sq({1, 0.0, 0.0}) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(jacobi_norm_sq({2, 0.0, 0.0}) == doctest::Approx(0.4).epsilon(1e-14));

    // against quadrature of the weighted square (degree 6, rule exact to 7)
    const double mu = 0.5;
    const QuadratureRule rule = gauss_lobatto_weights(4, mu);
    const double quad = gl_integrate(rule, [&](double x) {
        const double v = jacobi_eval({3, mu, -mu}, x);
        return v * v;
    });
    CHECK(jacobi_norm_sq({3, 0.5, -0.5}) == doctest::Approx(quad).epsilon(1e-12));
}

TEST_CASE("gamma function") {
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);

    // 13+ digits across (0, 50]
    for (double x : {0.1, 1.7, 7.3, 22.5, 50.0})
        CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-13));

    // reflection branch: Gamma(-1/2) = -2 sqrt(pi)
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
}

TEST_CASE("gamma ratio by descending product") {
    const int n = 10;
    const double mu = 0.5;
    const double direct = gamma_fn(n - mu + 1.0) / gamma_fn(n + 1.0);
    CHECK(gamma_ratio_n_mu(n, mu) == doctest::Approx(direct).epsilon(1e-13));
    // stays finite far beyond where the numerator alone would overflow
    CHECK(std::isfinite(gamma_ratio_n_mu(200, 0.3)));
}

TEST_CASE("sturm-liouville residual") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ab(-0.9, 2.0), xs(-1.0, 1.0);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const JacobiParams p{n, ab(rng), ab(rng)};
        for (int k = 0; k < 50; ++k) {
            const double x = xs(rng);
            const double v = jacobi_eval(p, x);
            const double d1 = jacobi_deriv(p, x, 1);
            const double d2 = jacobi_deriv(p, x, 2);
            const double res = (1.0 - x * x) * d2 -
                               ((p.alpha + p.beta + 2.0) * x + p.alpha - p.beta) * d1 +
                               n * (n + p.alpha + p.beta + 1.0) * v;
            CHECK(std::abs(res) <= 1e-9 * (1.0 + std::abs(v) * n * n));
        }
    }
}

TEST_CASE("orthogonality under the weighted rule") {
    for (double mu : {0.3, 0.7}) {
        const QuadratureRule rule = gauss_lobatto_weights(14, mu);
        for (int n = 0; n <= 12; ++n) {
            for (int k = 0; k < n; ++k) {
                const double ip = gl_integrate(rule, [&](double x) {
                    return jacobi_eval({n, mu, -mu}, x) * jacobi_eval({k, mu, -mu}, x);
                });
                CHECK(std::abs(ip) <= 1e-10);
            }
        }
    }
}

}  // TEST_SUITE
