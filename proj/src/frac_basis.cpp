#include "fracolloc/frac_basis.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "fracolloc/jacobi.hpp"

namespace fracolloc {

BasisChangeMatrix assemble_A(const Grid& dof_grid, double mu) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("assemble_A: mu must lie in (0,1)");
    dof_grid.validate();
    const int N = dof_grid.size();
    if (N < 1) throw std::invalid_argument("assemble_A: empty grid");
    for (double x : dof_grid.nodes)
        if (x <= -1.0 + 1e-14)
            throw std::domain_error("assemble_A: dof node at -1 (basis factor undefined)");

    Eigen::MatrixXd A(N, N);
    for (int n = 1; n <= N; ++n) {
        const JacobiParams p{n, mu, -mu};
        const double pm1 = jacobi_at_minus_one(p);
        for (int j = 0; j < N; ++j) {
            const double x = dof_grid.nodes[j];
            A(j, n - 1) = std::pow(x + 1.0, -mu) * (jacobi_eval(p, x) - pm1);
        }
    }
    return BasisChangeMatrix{std::move(A), mu, dof_grid};
}

Eigen::MatrixXd coefficients_by_solve(const BasisChangeMatrix& A) {
    const int N = static_cast<int>(A.entries.rows());
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A.entries);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot >= 1e-300))
        throw std::runtime_error("coefficients_by_solve: singular basis-change matrix");
    // A C^T = I  =>  row j of C carries the expansion of H_j.
    Eigen::MatrixXd inv = lu.solve(Eigen::MatrixXd::Identity(N, N));
    return inv.transpose();
}

Eigen::MatrixXd coefficients_explicit(int N, double mu, const QuadratureRule& rule) {
    if (rule.nodes.family.kind != NodeFamilyKind::jacobi_mu_lobatto ||
        std::abs(rule.nodes.family.mu - mu) > 1e-14)
        throw std::invalid_argument(
            "coefficients_explicit: rule is not the (mu,-mu) Lobatto family for this mu");
    if (rule.nodes.size() != N + 1)
        throw std::invalid_argument("coefficients_explicit: rule size does not match N");

    const auto& x = rule.nodes.nodes;  // x_0 = -1, ..., x_N = 1
    const auto& w = rule.weights;

    // Discrete norm of P_N (degree 2N exceeds the rule's exactness).
    const JacobiParams pN{N, mu, -mu};
    double sN = 0.0;
    for (int m = 0; m <= N; ++m) {
        const double v = jacobi_eval(pN, x[m]);
        sN += v * v * w[m];
    }

    Eigen::MatrixXd C(N, N);
    for (int k = 1; k <= N; ++k) {
        const JacobiParams pk{k, mu, -mu};
        const double den = (k < N) ? jacobi_norm_sq(pk) : sN;
        for (int j = 1; j <= N; ++j)
            C(j - 1, k - 1) = std::pow(x[j] + 1.0, mu) * jacobi_eval(pk, x[j]) * w[j] / den;
    }
    return C;
}

double condition_number_2(const BasisChangeMatrix& A) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A.entries);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (!(smin > 0.0) || !std::isfinite(smin))
        throw std::runtime_error("condition_number_2: singular matrix");
    return s(0) / smin;
}

FracBasis::FracBasis(BasisChangeMatrix change, Eigen::MatrixXd coeffs)
    : change_(std::move(change)), coeffs_(std::move(coeffs)) {
    const int N = size();
    p_at_minus_one_.resize(N);
    for (int n = 1; n <= N; ++n)
        p_at_minus_one_[n - 1] = jacobi_at_minus_one({n, mu(), -mu()});
}

FracBasis FracBasis::build(const Grid& dof_grid, double mu) {
    BasisChangeMatrix A = assemble_A(dof_grid, mu);
    Eigen::MatrixXd C = coefficients_by_solve(A);
    return FracBasis(std::move(A), std::move(C));
}

double FracBasis::h_eval(int j, double x) const {
    const int N = size();
    if (j < 1 || j > N) throw std::invalid_argument("h_eval: basis index out of range");
    if (x < -1.0 || x > 1.0) throw std::domain_error("h_eval: x outside [-1,1]");
    const auto& nodes = change_.grid.nodes;
    const double xj = nodes[j - 1];
    if (x == -1.0) return 0.0;
    double v = std::pow((x + 1.0) / (xj + 1.0), 1.0 - mu());
    for (int k = 1; k <= N; ++k) {
        if (k == j) continue;
        v *= (x - nodes[k - 1]) / (xj - nodes[k - 1]);
    }
    return v;
}

double FracBasis::reconstruct(const Eigen::VectorXd& nodal, double x) const {
    if (nodal.size() != size())
        throw std::invalid_argument("reconstruct: nodal vector length mismatch");
    double s = 0.0;
    for (int j = 1; j <= size(); ++j) s += nodal(j - 1) * h_eval(j, x);
    return s;
}

Eigen::VectorXd FracBasis::combine(const Eigen::VectorXd& nodal) const {
    if (nodal.size() > coeffs_.rows())
        throw std::invalid_argument("combine: more values than basis functions");
    return coeffs_.topRows(nodal.size()).transpose() * nodal;
}

double FracBasis::eval_expansion(const Eigen::VectorXd& c_hat, double x) const {
    if (c_hat.size() != size())
        throw std::invalid_argument("eval_expansion: coefficient length mismatch");
    if (x < -1.0 || x > 1.0) throw std::domain_error("eval_expansion: x outside [-1,1]");
    if (x == -1.0) return 0.0;
    double s = 0.0;
    for (int n = 1; n <= size(); ++n)
        s += c_hat(n - 1) * (jacobi_eval({n, mu(), -mu()}, x) - p_at_minus_one_[n - 1]);
    return std::pow(x + 1.0, -mu()) * s;
}

}  // namespace fracolloc
