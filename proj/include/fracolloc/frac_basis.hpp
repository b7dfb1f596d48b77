#ifndef FRACOLLOC_FRAC_BASIS_HPP
#define FRACOLLOC_FRAC_BASIS_HPP

#include <Eigen/Dense>

#include "fracolloc/grids.hpp"

namespace fracolloc {

/// The N x N change-of-basis matrix A with entries
///   a_{j,n} = (x_j+1)^{-mu} [ P_n^{mu,-mu}(x_j) - P_n^{mu,-mu}(-1) ],
/// j over the degrees of freedom x_1..x_N (all > -1), n = 1..N.
struct BasisChangeMatrix {
    Eigen::MatrixXd entries;
    double mu = 0.0;
    Grid grid;  // the N dof nodes
};

/// Assemble A on the given dof grid. Throws std::domain_error if any node is
/// at (or numerically on top of) -1.
BasisChangeMatrix assemble_A(const Grid& dof_grid, double mu);

/// Expansion coefficients c(j,n) of the fractional Lagrange basis, obtained by
/// dense LU: the returned matrix C satisfies A C^T = I, i.e. row j holds the
/// weighted-Jacobi coefficients of H_j.
Eigen::MatrixXd coefficients_by_solve(const BasisChangeMatrix& A);

/// Same coefficients from the closed-form Gauss-Lobatto expressions. Valid
/// only when the representation nodes are the (mu,-mu) Lobatto points carried
/// by `rule`; any other rule is rejected.
Eigen::MatrixXd coefficients_explicit(int N, double mu, const QuadratureRule& rule);

/// 2-norm condition number via singular values (one-sided Jacobi SVD).
double condition_number_2(const BasisChangeMatrix& A);

/// Fractional Lagrange basis H_1..H_N on dof nodes x_1..x_N with left
/// endpoint x_0 = -1 implicit: polynomials of degree N corrected by the
/// factor ((1+x)/(1+x_j))^{1-mu}, so that H_j(x_m) = delta_{jm} and every
/// H_j vanishes at -1 like (1+x)^{1-mu}.
class FracBasis {
public:
    /// Builds the basis and caches the expansion coefficients (one LU per
    /// (grid, mu) pair). The grid must not contain -1.
    static FracBasis build(const Grid& dof_grid, double mu);

    int size() const { return static_cast<int>(change_.grid.nodes.size()); }
    double mu() const { return change_.mu; }
    const Grid& rep_grid() const { return change_.grid; }
    const BasisChangeMatrix& change_matrix() const { return change_; }
    /// c(j,n) as row j-1, column n-1.
    const Eigen::MatrixXd& coeffs() const { return coeffs_; }

    /// H_j(x), 1-based j, via the product form with the positive exponent
    /// 1-mu; well defined on all of [-1,1] and exactly delta_{jm} at nodes.
    double h_eval(int j, double x) const;

    /// sum_j nodal_j H_j(x); exact at the dof nodes.
    double reconstruct(const Eigen::VectorXd& nodal, double x) const;

    /// Combined weighted-Jacobi coefficients c_hat = C^T nodal of an expansion
    /// given by nodal values (or of a dof subset when nodal is shorter).
    Eigen::VectorXd combine(const Eigen::VectorXd& nodal) const;

    /// (1+x)^{-mu} sum_n c_hat_n [P_n^{mu,-mu}(x) - P_n^{mu,-mu}(-1)];
    /// returns 0 at x = -1 (the expansion's limit).
    double eval_expansion(const Eigen::VectorXd& c_hat, double x) const;

private:
    FracBasis(BasisChangeMatrix change, Eigen::MatrixXd coeffs);

    BasisChangeMatrix change_;
    Eigen::MatrixXd coeffs_;
    std::vector<double> p_at_minus_one_;  // P_n^{mu,-mu}(-1), n = 1..N
};

}  // namespace fracolloc

#endif
