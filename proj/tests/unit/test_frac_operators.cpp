#include <doctest.h>

#include <cmath>

#include "fracolloc/frac_operators.hpp"
#include "fracolloc/jacobi.hpp"
#include "fracolloc/oracle.hpp"

using namespace fracolloc;

namespace {

Grid mu_dofs(int N, double mu) {
    Grid interior = mu_lobatto_grid(N, mu, false);
    std::vector<double> n = interior.nodes;
    n.push_back(1.0);
    return make_grid(std::move(n), GridRole::representation, interior.family);
}

Grid as_colloc(Grid g) {
    g.role = GridRole::collocation;
    return g;
}

}  // namespace

TEST_SUITE("frac_operators") {

TEST_CASE("weighted jacobi functions map to scaled legendre derivatives") {
    const double sigma = 0.6, mu = 1.0 - sigma;
    const int N = 9;
    const FracBasis basis = FracBasis::build(mu_dofs(N, mu), mu);
    const auto& nodes = basis.rep_grid().nodes;

    for (int n : {1, 4, 9}) {
        // samples of (1+x)^{-mu} (P_n^{mu,-mu}(x) - P_n^{mu,-mu}(-1))
        Eigen::VectorXd v(N);
        const double pm1 = jacobi_at_minus_one({n, mu, -mu});
        for (int j = 0; j < N; ++j)
            v(j) = std::pow(1.0 + nodes[j], -mu) * (jacobi_eval({n, mu, -mu}, nodes[j]) - pm1);

        for (double x : {-0.6, 0.1, 0.85}) {
            double got = 0.0;
            for (int j = 1; j <= N; ++j) got += v(j - 1) * basis_frac_deriv(basis, j, x);
            const double want = gamma_ratio_n_mu(n, mu) * jacobi_deriv({n, 0.0, 0.0}, x, 1);
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("basis fractional derivative against the quadrature oracle") {
    const double sigma = 0.5, mu = 0.5;
    const FracBasis basis = FracBasis::build(mu_dofs(6, mu), mu);
    for (int j : {1, 3, 6}) {
        auto hj = [&](double s) { return basis.h_eval(j, s); };
        for (double x : {-0.4, 0.3, 0.8}) {
            const auto q = oracle::rl_quadrature(hj, sigma, x);
            CHECK(std::abs(basis_frac_deriv(basis, j, x) - q.value) <= 1e-6);
        }
    }
}

TEST_CASE("span exactness of the differentiation matrix") {
    for (double sigma : {0.2, 0.5, 0.8}) {
        const double mu = 1.0 - sigma;
        const int N = 12;
        const FracBasis basis = FracBasis::build(mu_dofs(N, mu), mu);
        const Grid colloc = as_colloc(basis.rep_grid());
        const OperatorMatrix D = frac_diff_matrix(basis, colloc, sigma);

        for (int k = 0; k < N; ++k) {
            Eigen::VectorXd u(N);
            for (int j = 0; j < N; ++j)
                u(j) = std::pow(1.0 + basis.rep_grid().nodes[j], sigma + k);
            const Eigen::VectorXd got = D.entries * u;
            double worst = 0.0;
            for (int i = 0; i < N; ++i) {
                const double want =
                    oracle::rl_monomial(sigma + k, sigma, colloc.nodes[i]).value;
                worst = std::max(worst, std::abs(got(i) - want) / std::max(1.0, std::abs(want)));
            }
            CHECK(worst <= 1e-9);
        }
    }
}

TEST_CASE("constant direction is annihilated") {
    // (1+x)^{-mu} alone (the subtracted constant in the expansion) has a
    // vanishing image: the monomial rule hits the Gamma pole.
    const double mu = 0.5;
    CHECK(oracle::rl_monomial(-mu, 1.0 - mu, 0.3).value == 0.0);
}

TEST_CASE("matrix entries equal the per-function derivative values") {
    const double sigma = 0.4, mu = 0.6;
    const int N = 7;
    const FracBasis basis = FracBasis::build(mu_dofs(N, mu), mu);
    const Grid colloc = as_colloc(basis.rep_grid());
    const OperatorMatrix D = frac_diff_matrix(basis, colloc, sigma);
    for (int i = 0; i < N; ++i)
        for (int j = 1; j <= N; ++j) {
            const double direct = basis_frac_deriv(basis, j, colloc.nodes[i]);
            CHECK(std::abs(D.entries(i, j - 1) - direct) <=
                  1e-13 * std::max(1.0, std::abs(direct)));
        }
}

TEST_CASE("differentiation matrix rejects bad grids") {
    const double sigma = 0.5, mu = 0.5;
    const FracBasis basis = FracBasis::build(mu_dofs(5, mu), mu);
    CHECK_THROWS_AS(frac_diff_matrix(basis, as_colloc(mu_dofs(6, mu)), sigma),
                    std::invalid_argument);
    Grid with_left = make_grid({-1.0, -0.5, 0.0, 0.5, 1.0}, GridRole::collocation, {});
    CHECK_THROWS_AS(frac_diff_matrix(basis, with_left, sigma), std::domain_error);
    CHECK_THROWS_AS(frac_diff_matrix(basis, as_colloc(basis.rep_grid()), 0.4),
                    std::invalid_argument);
}

TEST_CASE("integer derivatives of the basis") {
    const double sigma = 0.5, mu = 0.5;
    const int N = 8;
    const FracBasis basis = FracBasis::build(mu_dofs(N, mu), mu);

    // first derivative vs central differences
    const double h = 1e-5;
    for (int j : {1, 4, 8})
        for (double x : {-0.5, 0.2, 0.7}) {
            const double fd = (basis.h_eval(j, x + h) - basis.h_eval(j, x - h)) / (2.0 * h);
            CHECK(std::abs(basis_integer_deriv(basis, j, x, 1) - fd) <= 1e-6);
        }

    // second derivative on a span function: u = (1+x)^{sigma+2}
    Eigen::VectorXd u(N);
    for (int j = 0; j < N; ++j) u(j) = std::pow(1.0 + basis.rep_grid().nodes[j], sigma + 2.0);
    for (double x : {-0.3, 0.4, 0.9}) {
        double got = 0.0;
        for (int j = 1; j <= N; ++j) got += u(j - 1) * basis_integer_deriv(basis, j, x, 2);
        const double want = (sigma + 2.0) * (sigma + 1.0) * std::pow(1.0 + x, sigma);
        CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, std::abs(want)));
    }

    CHECK_THROWS_AS(basis_integer_deriv(basis, 1, -1.0 + 1e-12, 1), std::domain_error);
}

TEST_CASE("advection-diffusion assembly") {
    const double sigma = 0.5, mu = 0.5, K = 10.0;
    const int N = 7;
    const FracBasis basis = FracBasis::build(mu_dofs(N, mu), mu);
    const Grid colloc = as_colloc(mu_lobatto_grid(N, mu, false));

    const OperatorMatrix L = advdiff_matrix(basis, colloc, sigma, K);
    REQUIRE(L.entries.rows() == N - 1);
    REQUIRE(L.entries.cols() == N - 1);

    SUBCASE("K = 0 reduces to the negated second-derivative matrix") {
        const OperatorMatrix L0 = advdiff_matrix(basis, colloc, sigma, 0.0);
        const OperatorMatrix D2 = second_deriv_matrix(basis, colloc);
        CHECK((L0.entries + D2.entries).cwiseAbs().maxCoeff() <=
              1e-10 * D2.entries.cwiseAbs().maxCoeff());
    }

    SUBCASE("linearity in the fractional part") {
        const OperatorMatrix D2 = second_deriv_matrix(basis, colloc);
        Eigen::MatrixXd F(N - 1, N - 1);
        for (int i = 0; i < N - 1; ++i)
            for (int j = 1; j <= N - 1; ++j)
                F(i, j - 1) = basis_frac_deriv(basis, j, colloc.nodes[i]);
        const Eigen::MatrixXd combo = -D2.entries + K * F;
        CHECK((L.entries - combo).cwiseAbs().maxCoeff() <=
              1e-12 * combo.cwiseAbs().maxCoeff());
    }

    SUBCASE("action on a span function matches the analytic oracle") {
        // u = (1+x)^{sigma+1}(1-x) = 2(1+x)^{sigma+1} - (1+x)^{sigma+2}
        Eigen::VectorXd u(N - 1);
        for (int j = 0; j < N - 1; ++j) {
            const double x = basis.rep_grid().nodes[j];
            u(j) = std::pow(1.0 + x, sigma + 1.0) * (1.0 - x);
        }
        const Eigen::VectorXd got = L.entries * u;
        for (int i = 0; i < N - 1; ++i) {
            const double z = colloc.nodes[i];
            const double upp = 2.0 * (sigma + 1.0) * sigma * std::pow(1.0 + z, sigma - 1.0) -
                               (sigma + 2.0) * (sigma + 1.0) * std::pow(1.0 + z, sigma);
            const double dfrac = 2.0 * oracle::rl_monomial(sigma + 1.0, sigma, z).value -
                                 oracle::rl_monomial(sigma + 2.0, sigma, z).value;
            const double want = -upp + K * dfrac;
            CHECK(std::abs(got(i) - want) <= 1e-7 * std::max(1.0, std::abs(want)));
        }
    }

    SUBCASE("endpoint collocation rejected") {
        Grid bad = make_grid({-0.5, 0.0, 0.3, 0.6, 0.8, 1.0}, GridRole::collocation, {});
        CHECK_THROWS_AS(advdiff_matrix(basis, bad, sigma, K), std::domain_error);
    }
}

TEST_CASE("orders above one by composition") {
    const double total = 1.5;  // fractional part 0.5
    const double mu = 0.5;
    const int N = 10;
    const FracBasis basis = FracBasis::build(mu_dofs(N, mu), mu);
    const auto& nodes = basis.rep_grid().nodes;

    for (int k : {2, 5}) {
        Eigen::VectorXd u(N);
        for (int j = 0; j < N; ++j) u(j) = std::pow(1.0 + nodes[j], 0.5 + k);
        for (double x : {-0.4, 0.2, 0.9}) {
            const double got = frac_deriv_eval(basis, u, total, x);
            const double want = oracle::rl_monomial(0.5 + k, total, x).value;
            CHECK(std::abs(got - want) <= 1e-7 * std::max(1.0, std::abs(want)));
        }
    }
}

}  // TEST_SUITE
