#ifndef FRACOLLOC_GRIDS_HPP
#define FRACOLLOC_GRIDS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fracolloc {

enum class GridRole { representation, collocation };

/// Test-function family behind the superconsistent node constructions:
/// ultraspherical alpha=beta=1/2 (Chebyshev-Lobatto representation grid),
/// alpha=beta=1 (Legendre-Lobatto), or the (1+mu,1-mu) family tied to the
/// (mu,-mu) Lobatto grid.
enum class ChiFamily { cheb, leg, mu };

enum class NodeFamilyKind {
    chebyshev_lobatto,
    legendre_lobatto,
    jacobi_mu_lobatto,
    legendre_zeros,
    psi_zeros,
    mixed_zeros,
    custom,
};

struct GridFamily {
    NodeFamilyKind kind = NodeFamilyKind::custom;
    double mu = 0.0;     // jacobi_mu_lobatto
    double sigma = 0.0;  // psi_zeros, mixed_zeros
    double K = 0.0;      // mixed_zeros
    ChiFamily chi = ChiFamily::mu;  // psi_zeros, mixed_zeros
};

/// Ordered node set on [-1,1].
struct Grid {
    std::vector<double> nodes;  // strictly increasing, gaps >= 1e-12
    GridRole role = GridRole::representation;
    GridFamily family{};

    int size() const { return static_cast<int>(nodes.size()); }
    bool includes_left() const { return !nodes.empty() && nodes.front() == -1.0; }
    bool includes_right() const { return !nodes.empty() && nodes.back() == 1.0; }

    /// Throws if nodes are not strictly increasing within [-1,1].
    void validate() const;
};

Grid make_grid(std::vector<double> nodes, GridRole role, GridFamily family);

/// Quadrature rule: nodes plus positive weights of equal length.
struct QuadratureRule {
    Grid nodes;
    std::vector<double> weights;
};

/// Root search failed to locate the predicted number of sign changes.
struct bracketing_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Chebyshev-Lobatto points -cos(j pi / N), j = 0..N (N+1 nodes).
Grid chebyshev_lobatto(int N);

/// The N-1 interior zeros of d/dx P_N^{alpha,beta} (equivalently the zeros of
/// P_{N-1}^{alpha+1,beta+1}), optionally with the endpoints +-1 appended.
/// Roots are bracketed by degree-ascending interlacing and polished by
/// bisection-safeguarded Newton until |dx| <= 1e-14.
Grid jacobi_deriv_zeros(int N, double alpha, double beta, bool with_endpoints);

/// Zeros of the Legendre polynomial P_N.
Grid legendre_zeros(int N);

/// The (mu,-mu) Lobatto family: zeros of d/dx P_N^{mu,-mu}, tagged with mu.
Grid mu_lobatto_grid(int N, double mu, bool with_endpoints);

/// Gauss-Lobatto rule for the weight (1-x)^mu (1+x)^{-mu} on the nodes of
/// mu_lobatto_grid(N, mu, true). Interior weights from the closed form;
/// endpoint weights from the 2x2 exactness system on the monomials {1, x}.
/// Exact for polynomials of degree <= 2N-1 against the weight.
QuadratureRule gauss_lobatto_weights(int N, double mu);

/// All zeros of P_n^{alpha,beta}, ascending. Exposed for reuse by tests and
/// the superconsistency bracketing.
std::vector<double> jacobi_polynomial_zeros(int n, double alpha, double beta);

}  // namespace fracolloc

#endif
