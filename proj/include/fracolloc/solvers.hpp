#ifndef FRACOLLOC_SOLVERS_HPP
#define FRACOLLOC_SOLVERS_HPP

#include <functional>
#include <memory>

#include <Eigen/Dense>

#include "fracolloc/frac_basis.hpp"
#include "fracolloc/grids.hpp"

namespace fracolloc {

/// The six grid pairings: C1-C3 for D^sigma u = g with u(-1) = 0 (collocation
/// equal to the representation nodes, to the Chebyshev-Lobatto points, or to
/// the zeros of Psi^{1+mu,1-mu}); C4-C6 are their boundary-value analogues
/// for -u'' + K D^sigma u = g with u(+-1) = 0, C6 collocating at the roots of
/// -chi'' + K Psi = 0.
enum class GridChoice { C1, C2, C3, C4, C5, C6 };

struct Problem {
    enum class Kind { ode, bvp };
    Kind kind;
    std::function<double(double)> g;
    double sigma;
    double K = 0.0;
};

/// Discrete solution plus everything needed to evaluate and compare it.
class SolveReport {
public:
    int N = 0;
    double sigma = 0.0;
    double K = 0.0;
    GridChoice choice = GridChoice::C1;
    Grid rep;      // degrees of freedom carrying the nodal values
    Grid colloc;
    Eigen::VectorXd nodal_values;
    double residual = 0.0;    // max-norm residual of the collocated system
    double runtime_ms = 0.0;  // assembly + solve wall time

    /// u_N(x) through the cached weighted-Jacobi expansion; exactly 0 at -1.
    double eval(double x) const;

private:
    friend SolveReport solve_on_grids(const Problem&, const FracBasis&, const Grid&,
                                      GridChoice);
    std::shared_ptr<const FracBasis> basis_;
    Eigen::VectorXd c_hat_;
};

/// Collocation solve of D^sigma u = g, u(-1) = 0, on the (mu,-mu) Lobatto
/// representation grid (interior derivative zeros plus +1), N unknowns.
SolveReport solve_fractional_ode(const std::function<double(double)>& g, double sigma,
                                 int N, GridChoice choice);

/// Collocation solve of -u'' + K D^sigma u = g, u(+-1) = 0; N-1 interior
/// unknowns on the same representation family.
SolveReport solve_fractional_bvp(const std::function<double(double)>& g, double sigma,
                                 double K, int N, GridChoice choice);

/// High-resolution surrogate for the unknown exact solution: Chebyshev-Lobatto
/// points for both representation and collocation grids.
SolveReport reference_solution(const Problem& problem, int N_ref = 50);

/// Discrete maximum norm: max_j |u_N(x_j) - u_ref(x_j)| over the nodal values
/// of `report`, the reference evaluated through its expansion.
double max_norm_error(const SolveReport& report, const SolveReport& reference);

/// Maximum difference over a uniform mesh on [-1+1e-6, 1]; diagnostic
/// companion to the nodal norm (interpolation error included).
double mesh_max_error(const SolveReport& report, const SolveReport& reference,
                      int points = 1001);

/// Two-line CSV (header + row) summarizing a run against a reference:
/// N,sigma,K,choice,error,runtime_ms.
std::string solve_report_csv(const SolveReport& report, const SolveReport& reference);

}  // namespace fracolloc

#endif
