#include "fracolloc/frac_operators.hpp"

#include <cmath>

#include "fracolloc/jacobi.hpp"

namespace fracolloc {

namespace {

void require_matching_mu(const FracBasis& basis, double sigma, const char* where) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument(std::string(where) + ": sigma must lie in (0,1)");
    if (std::abs(basis.mu() - (1.0 - sigma)) > 1e-12)
        throw std::invalid_argument(std::string(where) +
                                    ": basis requires mu = 1 - sigma");
}

// -d^2/dx^2 [(1+x)^{-mu}(P_n^{mu,-mu}(x) - P_n^{mu,-mu}(-1))] at z, expanded
// by the product rule with exact Jacobi derivatives.
double neg_weighted_second(int n, double mu, double pm1, double z) {
    const JacobiParams p{n, mu, -mu};
    const double w = std::pow(z + 1.0, -mu);
    const double w1 = -mu * std::pow(z + 1.0, -mu - 1.0);
    const double w2 = mu * (mu + 1.0) * std::pow(z + 1.0, -mu - 2.0);
    return -(w2 * (jacobi_eval(p, z) - pm1) + 2.0 * w1 * jacobi_deriv(p, z, 1) +
             w * jacobi_deriv(p, z, 2));
}

}  // namespace

double basis_frac_deriv(const FracBasis& basis, int j, double x) {
    const int N = basis.size();
    if (j < 1 || j > N) throw std::invalid_argument("basis_frac_deriv: index out of range");
    const double mu = basis.mu();
    double s = 0.0;
    for (int n = 1; n <= N; ++n)
        s += gamma_ratio_n_mu(n, mu) * basis.coeffs()(j - 1, n - 1) *
             jacobi_deriv({n, 0.0, 0.0}, x, 1);
    return s;
}

OperatorMatrix frac_diff_matrix(const FracBasis& basis, const Grid& colloc, double sigma) {
    require_matching_mu(basis, sigma, "frac_diff_matrix");
    const int N = basis.size();
    if (colloc.size() != N)
        throw std::invalid_argument("frac_diff_matrix: collocation grid must have N nodes");
    for (double z : colloc.nodes)
        if (z <= -1.0 + 1e-10)
            throw std::domain_error("frac_diff_matrix: collocation node at -1");

    const double mu = basis.mu();
    // Column-scaled coefficients: G(j,n) = c(j,n) Gamma(n-mu+1)/n!.
    Eigen::MatrixXd G = basis.coeffs();
    for (int n = 1; n <= N; ++n) G.col(n - 1) *= gamma_ratio_n_mu(n, mu);

    Eigen::MatrixXd P(N, N);
    for (int i = 0; i < N; ++i)
        for (int n = 1; n <= N; ++n)
            P(i, n - 1) = jacobi_deriv({n, 0.0, 0.0}, colloc.nodes[i], 1);

    OperatorMatrix op;
    op.entries = P * G.transpose();
    op.sigma = sigma;
    op.kind = OperatorKind::frac_deriv;
    op.rep_grid = basis.rep_grid();
    op.colloc_grid = colloc;
    return op;
}

double basis_integer_deriv(const FracBasis& basis, int j, double x, int k) {
    const int N = basis.size();
    if (j < 1 || j > N)
        throw std::invalid_argument("basis_integer_deriv: index out of range");
    if (k != 1 && k != 2)
        throw std::invalid_argument("basis_integer_deriv: order must be 1 or 2");
    if (std::abs(1.0 + x) < 1e-10)
        throw std::domain_error("basis_integer_deriv: singular at x = -1");

    const double mu = basis.mu();
    double s = 0.0;
    for (int n = 1; n <= N; ++n) {
        const JacobiParams p{n, mu, -mu};
        const double shifted = jacobi_eval(p, x) - jacobi_at_minus_one(p);
        const double w = std::pow(x + 1.0, -mu);
        double term;
        if (k == 1) {
            term = -mu * std::pow(x + 1.0, -mu - 1.0) * shifted + w * jacobi_deriv(p, x, 1);
        } else {
            term = mu * (mu + 1.0) * std::pow(x + 1.0, -mu - 2.0) * shifted -
                   2.0 * mu * std::pow(x + 1.0, -mu - 1.0) * jacobi_deriv(p, x, 1) +
                   w * jacobi_deriv(p, x, 2);
        }
        s += basis.coeffs()(j - 1, n - 1) * term;
    }
    return s;
}

OperatorMatrix second_deriv_matrix(const FracBasis& basis, const Grid& colloc) {
    const int N = basis.size();
    if (colloc.size() != N - 1)
        throw std::invalid_argument("second_deriv_matrix: need N-1 collocation nodes");
    const double mu = basis.mu();

    Eigen::MatrixXd M(N - 1, N - 1);
    for (int i = 0; i < N - 1; ++i) {
        const double z = colloc.nodes[i];
        if (std::abs(1.0 + z) < 1e-10 || std::abs(1.0 - z) < 1e-14)
            throw std::domain_error("second_deriv_matrix: collocation node at an endpoint");
        for (int j = 1; j <= N - 1; ++j) {
            double s = 0.0;
            for (int n = 1; n <= N; ++n) {
                const double pm1 = jacobi_at_minus_one({n, mu, -mu});
                s += basis.coeffs()(j - 1, n - 1) * (-neg_weighted_second(n, mu, pm1, z));
            }
            M(i, j - 1) = s;
        }
    }
    OperatorMatrix op;
    op.entries = std::move(M);
    op.sigma = 1.0 - mu;
    op.kind = OperatorKind::second_deriv;
    op.rep_grid = basis.rep_grid();
    op.colloc_grid = colloc;
    return op;
}

OperatorMatrix advdiff_matrix(const FracBasis& basis, const Grid& colloc, double sigma,
                              double K) {
    require_matching_mu(basis, sigma, "advdiff_matrix");
    const int N = basis.size();
    if (colloc.size() != N - 1)
        throw std::invalid_argument("advdiff_matrix: need N-1 collocation nodes");

    const double mu = basis.mu();
    Eigen::MatrixXd M(N - 1, N - 1);
    for (int i = 0; i < N - 1; ++i) {
        const double z = colloc.nodes[i];
        if (std::abs(1.0 + z) < 1e-10 || std::abs(1.0 - z) < 1e-14)
            throw std::domain_error("advdiff_matrix: collocation node at an endpoint");
        for (int j = 1; j <= N - 1; ++j) {
            double s = 0.0;
            for (int n = 1; n <= N; ++n) {
                const double pm1 = jacobi_at_minus_one({n, mu, -mu});
                const double frac =
                    gamma_ratio_n_mu(n, mu) * jacobi_deriv({n, 0.0, 0.0}, z, 1);
                s += basis.coeffs()(j - 1, n - 1) *
                     (neg_weighted_second(n, mu, pm1, z) + K * frac);
            }
            M(i, j - 1) = s;
        }
    }
    OperatorMatrix op;
    op.entries = std::move(M);
    op.sigma = sigma;
    op.K = K;
    op.kind = OperatorKind::adv_diff;
    op.rep_grid = basis.rep_grid();
    op.colloc_grid = colloc;
    return op;
}

double frac_deriv_eval(const FracBasis& basis, const Eigen::VectorXd& nodal, double sigma,
                       double x) {
    if (!(sigma > 0.0 && sigma < 2.0) || sigma == 1.0)
        throw std::invalid_argument("frac_deriv_eval: order must lie in (0,1) or (1,2)");
    const double frac_part = sigma < 1.0 ? sigma : sigma - 1.0;
    if (std::abs(basis.mu() - (1.0 - frac_part)) > 1e-12)
        throw std::invalid_argument("frac_deriv_eval: basis requires mu = 1 - frac(sigma)");
    const int deriv_order = sigma < 1.0 ? 1 : 2;

    const Eigen::VectorXd c_hat = basis.combine(nodal);
    const double mu = basis.mu();
    double s = 0.0;
    for (int n = 1; n <= basis.size(); ++n)
        s += gamma_ratio_n_mu(n, mu) * c_hat(n - 1) *
             jacobi_deriv({n, 0.0, 0.0}, x, deriv_order);
    return s;
}

}  // namespace fracolloc
