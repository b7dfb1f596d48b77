#include "fracolloc/tables.hpp"

#include <cmath>
#include <sstream>

#include "fracolloc/csv.hpp"
#include "fracolloc/frac_basis.hpp"
#include "fracolloc/frac_operators.hpp"
#include "fracolloc/solvers.hpp"
#include "fracolloc/superconsistency.hpp"

namespace fracolloc {

namespace {

Grid cheb_dofs(int N) {
    Grid full = chebyshev_lobatto(N);
    std::vector<double> n(full.nodes.begin() + 1, full.nodes.end());
    return make_grid(std::move(n), GridRole::representation, full.family);
}

double table2_g(double x) { return std::sin(2.0 * (x + 1.0) * (x + 1.0)); }
double fig1_f(double x) { return std::sin((x + 1.0) * (x + 1.0)); }

std::string family_name(ChiFamily f) {
    switch (f) {
        case ChiFamily::cheb: return "cheb";
        case ChiFamily::leg: return "leg";
        case ChiFamily::mu: return "mu";
    }
    return "?";
}

}  // namespace

std::string table1_csv(double mu, const std::vector<int>& point_counts) {
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("table1: mu must lie in (0,1)");
    std::ostringstream out;
    out << "N,cond2\n";
    for (int n_points : point_counts) {
        if (n_points < 3) throw std::invalid_argument("table1: need at least 3 grid points");
        const int dofs = n_points - 1;
        const BasisChangeMatrix A = assemble_A(cheb_dofs(dofs), mu);
        out << n_points << "," << format_g17(condition_number_2(A)) << "\n";
    }
    return out.str();
}

TableResult table2_csv(double sigma, const std::vector<int>& Ns, int N_ref) {
    TableResult res;
    const Problem prob{Problem::Kind::ode, table2_g, sigma};
    const SolveReport ref = reference_solution(prob, N_ref);

    std::ostringstream out;
    out << "N,err_choice1,err_choice2,err_choice3\n";
    for (int N : Ns) {
        out << N;
        for (GridChoice c : {GridChoice::C1, GridChoice::C2, GridChoice::C3}) {
            try {
                const SolveReport r = solve_fractional_ode(table2_g, sigma, N, c);
                out << "," << format_g17(max_norm_error(r, ref));
            } catch (const bracketing_error& e) {
                out << ",NA";
                res.complete = false;
                res.warnings.push_back("N=" + std::to_string(N) + ": " + e.what());
            }
        }
        out << "\n";
    }
    res.csv = out.str();
    return res;
}

TableResult table3_csv(double sigma, double K, const std::vector<int>& Ns, int N_ref) {
    TableResult res;
    auto g = [](double) { return 1.0; };
    const Problem prob{Problem::Kind::bvp, g, sigma, K};
    const SolveReport ref = reference_solution(prob, N_ref);

    std::ostringstream out;
    out << "N,err_choice4,err_choice5,err_choice6\n";
    for (int N : Ns) {
        out << N;
        for (GridChoice c : {GridChoice::C4, GridChoice::C5, GridChoice::C6}) {
            try {
                const SolveReport r = solve_fractional_bvp(g, sigma, K, N, c);
                out << "," << format_g17(max_norm_error(r, ref));
            } catch (const blowup_error& e) {
                out << ",NA";
                res.complete = false;
                res.warnings.push_back("N=" + std::to_string(N) + ": " + e.what());
            } catch (const bracketing_error& e) {
                out << ",NA";
                res.complete = false;
                res.warnings.push_back("N=" + std::to_string(N) + ": " + e.what());
            }
        }
        out << "\n";
    }
    res.csv = out.str();
    return res;
}

std::string fig1_csv(int N, const std::vector<double>& sigmas, int mesh_points) {
    if (N < 2) throw std::invalid_argument("fig1: N must be >= 2");
    if (mesh_points < 2) throw std::invalid_argument("fig1: mesh_points must be >= 2");
    for (double s : sigmas)
        if (!(s > 0.0 && s < 2.0) || s == 1.0)
            throw std::invalid_argument("fig1: orders must lie in (0,1) or (1,2)");

    const Grid rep = cheb_dofs(N);
    Eigen::VectorXd samples(N);
    for (int j = 0; j < N; ++j) samples(j) = fig1_f(rep.nodes[j]);

    // One basis per order (mu is tied to the fractional part).
    std::vector<FracBasis> bases;
    bases.reserve(sigmas.size());
    for (double s : sigmas) {
        const double frac_part = s < 1.0 ? s : s - 1.0;
        bases.push_back(FracBasis::build(rep, 1.0 - frac_part));
    }

    std::ostringstream out;
    out << "x";
    for (double s : sigmas) {
        char label[32];
        std::snprintf(label, sizeof(label), "sigma_%g", s);
        out << "," << label;
    }
    out << "\n";
    for (int i = 0; i < mesh_points; ++i) {
        const double x = -1.0 + 2.0 * i / (mesh_points - 1);
        out << format_g17(x);
        for (std::size_t k = 0; k < sigmas.size(); ++k)
            out << "," << format_g17(frac_deriv_eval(bases[k], samples, sigmas[k], x));
        out << "\n";
    }
    return out.str();
}

std::string nodes_csv(ChiFamily family, int N, const std::vector<double>& mus, bool with_K,
                      double K) {
    std::ostringstream out;
    out << "family,N,mu,kind,index,x\n";
    const std::string fam = family_name(family);
    auto emit = [&](double mu, const char* kind, const std::vector<double>& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i)
            out << fam << "," << N << "," << format_g17(mu) << "," << kind << "," << i
                << "," << format_g17(xs[i]) << "\n";
    };
    for (double mu : mus) {
        if (!(mu > 0.0 && mu < 1.0))
            throw std::invalid_argument("nodes: mu must lie in (0,1)");
        const double sigma = 1.0 - mu;
        Grid rep;
        switch (family) {
            case ChiFamily::cheb: rep = chebyshev_lobatto(N); break;
            case ChiFamily::leg: rep = jacobi_deriv_zeros(N, 0.0, 0.0, true); break;
            case ChiFamily::mu: rep = mu_lobatto_grid(N, mu, true); break;
        }
        emit(mu, "rep", rep.nodes);
        emit(mu, "legendre_zero", legendre_zeros(N).nodes);
        emit(mu, "psi_zero", superconsistent_nodes(family, N, sigma).nodes);
        if (with_K)
            emit(mu, "mixed_root", mixed_collocation_nodes(family, N, sigma, K).nodes);
    }
    return out.str();
}

std::string matrix_csv(const std::string& kind, int N, double sigma, double K) {
    const double mu = 1.0 - sigma;
    Grid interior = mu_lobatto_grid(N, mu, false);
    std::vector<double> dofs = interior.nodes;
    dofs.push_back(1.0);
    Grid rep = make_grid(std::move(dofs), GridRole::representation, interior.family);

    Eigen::MatrixXd M;
    if (kind == "A") {
        M = assemble_A(rep, mu).entries;
    } else {
        const FracBasis basis = FracBasis::build(rep, mu);
        if (kind == "frac") {
            Grid colloc = rep;
            colloc.role = GridRole::collocation;
            M = frac_diff_matrix(basis, colloc, sigma).entries;
        } else if (kind == "second") {
            interior.role = GridRole::collocation;
            M = second_deriv_matrix(basis, interior).entries;
        } else if (kind == "advdiff") {
            interior.role = GridRole::collocation;
            M = advdiff_matrix(basis, interior, sigma, K).entries;
        } else {
            throw std::invalid_argument("matrix: kind must be A, frac, second or advdiff");
        }
    }

    std::ostringstream out;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (j) out << ",";
            out << format_g17(M(i, j));
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace fracolloc
