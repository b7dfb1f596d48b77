#ifndef FRACOLLOC_TABLES_HPP
#define FRACOLLOC_TABLES_HPP

#include <string>
#include <vector>

#include "fracolloc/grids.hpp"

namespace fracolloc {

/// CSV producers behind the command-line front end. Each function is
/// deterministic: the same arguments yield a byte-identical string.

/// Conditioning of the basis-change matrix on the Chebyshev-Lobatto family.
/// The row label N counts the grid points of the set including the left
/// endpoint -1, so row N reports cond2 for the (N-1)-dof matrix on the nodes
/// -cos(j pi/(N-1)); this is the convention of the published table this
/// command reproduces. Columns: N,cond2.
std::string table1_csv(double mu, const std::vector<int>& point_counts);

struct TableResult {
    std::string csv;
    bool complete = true;                 // false when a node search failed
    std::vector<std::string> warnings;
};

/// Nodal max errors of the three collocation choices for D^sigma u = g,
/// u(-1) = 0, against a Chebyshev-grid reference of resolution N_ref.
/// Columns: N,err_choice1,err_choice2,err_choice3.
TableResult table2_csv(double sigma, const std::vector<int>& Ns, int N_ref = 50);

/// Same for -u'' + K D^sigma u = g, u(+-1) = 0.
/// Columns: N,err_choice4,err_choice5,err_choice6.
TableResult table3_csv(double sigma, double K, const std::vector<int>& Ns, int N_ref = 50);

/// Discrete fractional derivatives of f(x) = sin((x+1)^2) on the
/// Chebyshev-Lobatto grid with collocation = representation, evaluated on a
/// uniform mesh. One column per requested order; orders may come from (0,1)
/// or (1,2). Columns: x,sigma_<s>,...
std::string fig1_csv(int N, const std::vector<double>& sigmas, int mesh_points = 201);

/// Node dump for one family: representation nodes, Legendre zeros, Psi zeros,
/// and (when with_K is set) the mixed-operator roots, for each requested mu.
/// Columns: family,N,mu,kind,index,x.
std::string nodes_csv(ChiFamily family, int N, const std::vector<double>& mus, bool with_K,
                      double K);

/// Row-major dump of one operator or basis-change matrix.
/// kind: "A" | "frac" | "second" | "advdiff".
std::string matrix_csv(const std::string& kind, int N, double sigma, double K);

}  // namespace fracolloc

#endif
