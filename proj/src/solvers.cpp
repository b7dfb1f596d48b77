#include "fracolloc/solvers.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>

#include "fracolloc/csv.hpp"
#include "fracolloc/frac_operators.hpp"
#include "fracolloc/superconsistency.hpp"

namespace fracolloc {

namespace {

Grid dof_subset(const Grid& g, int count, GridRole role) {
    std::vector<double> n(g.nodes.begin(), g.nodes.begin() + count);
    return make_grid(std::move(n), role, g.family);
}

// Chebyshev-Lobatto degrees of freedom: -cos(j pi/N), j = 1..N.
Grid cheb_dofs(int N) {
    Grid full = chebyshev_lobatto(N);
    std::vector<double> n(full.nodes.begin() + 1, full.nodes.end());
    return make_grid(std::move(n), GridRole::representation, full.family);
}

Eigen::VectorXd sample(const std::function<double(double)>& g, const Grid& grid) {
    Eigen::VectorXd v(grid.size());
    for (int i = 0; i < grid.size(); ++i) v(i) = g(grid.nodes[i]);
    return v;
}

// LU solve with one step of iterative refinement when warranted.
Eigen::VectorXd solve_system(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             double* residual_out) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot >= 1e-300)) throw std::runtime_error("solver: singular system");
    Eigen::VectorXd u = lu.solve(b);
    const double bnorm = b.lpNorm<Eigen::Infinity>();
    Eigen::VectorXd r = b - A * u;
    if (r.lpNorm<Eigen::Infinity>() > 1e-12 * bnorm) {
        u += lu.solve(r);
        r = b - A * u;
    }
    if (residual_out) *residual_out = r.lpNorm<Eigen::Infinity>();
    return u;
}

}  // namespace

SolveReport solve_on_grids(const Problem& problem, const FracBasis& basis,
                           const Grid& colloc, GridChoice choice) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveReport rep;
    rep.sigma = problem.sigma;
    rep.K = problem.K;
    rep.choice = choice;
    rep.colloc = colloc;

    const Eigen::VectorXd b = sample(problem.g, colloc);
    if (problem.kind == Problem::Kind::ode) {
        rep.N = basis.size();
        rep.rep = basis.rep_grid();
        const OperatorMatrix D = frac_diff_matrix(basis, colloc, problem.sigma);
        rep.nodal_values = solve_system(D.entries, b, &rep.residual);
    } else {
        rep.N = basis.size();
        rep.rep = dof_subset(basis.rep_grid(), basis.size() - 1, GridRole::representation);
        const OperatorMatrix L = advdiff_matrix(basis, colloc, problem.sigma, problem.K);
        rep.nodal_values = solve_system(L.entries, b, &rep.residual);
    }
    rep.basis_ = std::make_shared<FracBasis>(basis);
    rep.c_hat_ = basis.combine(rep.nodal_values);
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

double SolveReport::eval(double x) const {
    if (!basis_) throw std::logic_error("SolveReport: empty report");
    return basis_->eval_expansion(c_hat_, x);
}

SolveReport solve_fractional_ode(const std::function<double(double)>& g, double sigma,
                                 int N, GridChoice choice) {
    if (N < 2) throw std::invalid_argument("solve_fractional_ode: N must be >= 2");
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("solve_fractional_ode: sigma must lie in (0,1)");
    const double mu = 1.0 - sigma;

    // Representation: the N-1 zeros of d/dx P_N^{mu,-mu} plus the node +1.
    Grid interior = mu_lobatto_grid(N, mu, false);
    std::vector<double> dofs = interior.nodes;
    dofs.push_back(1.0);
    Grid rep = make_grid(std::move(dofs), GridRole::representation, interior.family);
    const FracBasis basis = FracBasis::build(rep, mu);

    Grid colloc;
    switch (choice) {
        case GridChoice::C1:
            colloc = rep;
            colloc.role = GridRole::collocation;
            break;
        case GridChoice::C2:
            colloc = cheb_dofs(N);
            colloc.role = GridRole::collocation;
            break;
        case GridChoice::C3:
            colloc = superconsistent_nodes(ChiFamily::mu, N, sigma);
            break;
        default:
            throw std::invalid_argument("solve_fractional_ode: choice must be C1, C2 or C3");
    }
    return solve_on_grids({Problem::Kind::ode, g, sigma}, basis, colloc, choice);
}

SolveReport solve_fractional_bvp(const std::function<double(double)>& g, double sigma,
                                 double K, int N, GridChoice choice) {
    if (N < 3) throw std::invalid_argument("solve_fractional_bvp: N must be >= 3");
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("solve_fractional_bvp: sigma must lie in (0,1)");
    const double mu = 1.0 - sigma;

    Grid interior = mu_lobatto_grid(N, mu, false);
    std::vector<double> dofs = interior.nodes;
    dofs.push_back(1.0);
    Grid rep = make_grid(std::move(dofs), GridRole::representation, interior.family);
    const FracBasis basis = FracBasis::build(rep, mu);

    Grid colloc;
    switch (choice) {
        case GridChoice::C4:
            colloc = interior;
            colloc.role = GridRole::collocation;
            break;
        case GridChoice::C5: {
            Grid cheb = cheb_dofs(N);
            colloc = dof_subset(cheb, N - 1, GridRole::collocation);
            break;
        }
        case GridChoice::C6:
            colloc = mixed_collocation_nodes(ChiFamily::mu, N, sigma, K);
            break;
        default:
            throw std::invalid_argument("solve_fractional_bvp: choice must be C4, C5 or C6");
    }
    return solve_on_grids({Problem::Kind::bvp, g, sigma, K}, basis, colloc, choice);
}

SolveReport reference_solution(const Problem& problem, int N_ref) {
    if (N_ref < 4) throw std::invalid_argument("reference_solution: N_ref too small");
    const double mu = 1.0 - problem.sigma;
    Grid rep = cheb_dofs(N_ref);
    const FracBasis basis = FracBasis::build(rep, mu);

    Grid colloc;
    if (problem.kind == Problem::Kind::ode) {
        colloc = rep;
        colloc.role = GridRole::collocation;
    } else {
        colloc = dof_subset(rep, N_ref - 1, GridRole::collocation);
    }
    return solve_on_grids(problem, basis, colloc,
                          problem.kind == Problem::Kind::ode ? GridChoice::C1
                                                             : GridChoice::C4);
}

double max_norm_error(const SolveReport& report, const SolveReport& reference) {
    if (std::abs(report.sigma - reference.sigma) > 1e-14 ||
        std::abs(report.K - reference.K) > 1e-14)
        throw std::invalid_argument("max_norm_error: reports describe different problems");
    double e = 0.0;
    if (report.rep.nodes == reference.rep.nodes) {
        // shared grid: compare the nodal values directly
        for (int j = 0; j < report.rep.size(); ++j)
            e = std::max(e, std::abs(report.nodal_values(j) - reference.nodal_values(j)));
        return e;
    }
    for (int j = 0; j < report.rep.size(); ++j)
        e = std::max(e, std::abs(report.nodal_values(j) -
                                 reference.eval(report.rep.nodes[j])));
    return e;
}

double mesh_max_error(const SolveReport& report, const SolveReport& reference, int points) {
    if (points < 2) throw std::invalid_argument("mesh_max_error: need at least 2 points");
    const double lo = -1.0 + 1e-6, hi = 1.0;
    double e = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * i / (points - 1);
        e = std::max(e, std::abs(report.eval(x) - reference.eval(x)));
    }
    return e;
}

std::string solve_report_csv(const SolveReport& report, const SolveReport& reference) {
    std::ostringstream out;
    out << "N,sigma,K,choice,error,runtime_ms\n";
    out << report.N << "," << format_g17(report.sigma) << "," << format_g17(report.K) << ","
        << "C" << static_cast<int>(report.choice) + 1 << ","
        << format_g17(max_norm_error(report, reference)) << ","
        << format_g17(report.runtime_ms) << "\n";
    return out.str();
}

}  // namespace fracolloc
