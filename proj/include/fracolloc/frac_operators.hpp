#ifndef FRACOLLOC_FRAC_OPERATORS_HPP
#define FRACOLLOC_FRAC_OPERATORS_HPP

#include <Eigen/Dense>

#include "fracolloc/frac_basis.hpp"
#include "fracolloc/grids.hpp"

namespace fracolloc {

enum class OperatorKind { frac_deriv, second_deriv, adv_diff };

/// Discrete operator: rows indexed by collocation nodes z_i, columns by basis
/// functions H_j. The basis exponent is tied to the derivative order through
/// mu = 1 - sigma.
struct OperatorMatrix {
    Eigen::MatrixXd entries;
    double sigma = 0.0;
    double K = 0.0;
    OperatorKind kind = OperatorKind::frac_deriv;
    Grid rep_grid;
    Grid colloc_grid;
};

/// (D^sigma H_j)(x) = sum_n Gamma(n-mu+1)/n! c(j,n) P_n'(x)  (P_n Legendre).
double basis_frac_deriv(const FracBasis& basis, int j, double x);

/// N x N fractional differentiation matrix on an arbitrary collocation grid
/// of N nodes in (-1, 1].
OperatorMatrix frac_diff_matrix(const FracBasis& basis, const Grid& colloc, double sigma);

/// k-th integer derivative of H_j (k = 1 or 2), via the product rule on the
/// weighted-Jacobi expansion. Singular as x -> -1; guarded at |1+x| < 1e-10.
double basis_integer_deriv(const FracBasis& basis, int j, double x, int k);

/// Second-derivative matrix restricted to the boundary-value subset
/// H_1..H_{N-1} (functions vanishing at both endpoints), rows at the N-1
/// collocation nodes, which must lie strictly inside (-1,1).
OperatorMatrix second_deriv_matrix(const FracBasis& basis, const Grid& colloc);

/// Matrix of -D^2 + K D^sigma on the boundary-value subset H_1..H_{N-1}.
OperatorMatrix advdiff_matrix(const FracBasis& basis, const Grid& colloc, double sigma,
                              double K);

/// Derivative of total order sigma in (0,1) or (1,2) of the expansion with
/// nodal values `nodal`, evaluated anywhere in (-1,1]. Orders above one are
/// composed analytically: the image of D^{1-mu} is a polynomial, so one more
/// differentiation stays exact (Legendre P_n' -> P_n'').
double frac_deriv_eval(const FracBasis& basis, const Eigen::VectorXd& nodal, double sigma,
                       double x);

}  // namespace fracolloc

#endif
