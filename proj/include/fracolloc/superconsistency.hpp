#ifndef FRACOLLOC_SUPERCONSISTENCY_HPP
#define FRACOLLOC_SUPERCONSISTENCY_HPP

#include <array>
#include <stdexcept>

#include "fracolloc/grids.hpp"
#include "fracolloc/jacobi.hpp"

namespace fracolloc {

/// Superconsistent node search failed (root count off in a stiff regime).
struct blowup_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Weighted test polynomial chi_N vanishing at every node of its family's
/// representation grid: (1+x)^e (1-x) P_{N-1}^{a,b}(x) expanded via the
/// three-term recurrence into three same-family Jacobi terms.
struct ChiFunction {
    ChiFamily family;
    int N;
    double mu;       // relevant for the mu family (and for D^sigma images)
    double exponent; // e: 1/2, 1, or 1-mu
    struct Term {
        double coef;
        JacobiParams poly;
    };
    std::array<Term, 3> terms;
};

ChiFunction make_chi(ChiFamily family, int N, double mu);

/// chi via the three-term expansion.
double chi_eval(const ChiFunction& chi, double x);

/// chi via the direct product form (1+x)^e (1-x) P_{N-1}^{a,b}(x);
/// cross-checks the expansion.
double chi_eval_product(const ChiFunction& chi, double x);

/// Exact fractional image Psi_N = D^sigma chi_N, sigma = 1-mu. For the mu
/// family Psi is itself a polynomial of degree N; for the ultraspherical
/// families Psi = (1+x)^{e+mu-1} W(x) with W a polynomial of degree N.
struct PsiFunction {
    ChiFamily family;
    int N;
    double mu;
    // mu family: scale * d/dx[(1+x) q'(x)], q = sum coef_i P_{deg_i} (Legendre).
    // cheb/leg:  d/dx[(1+x)^{e0} G(x)],     G = sum coef_i P_{deg_i}^{a,b}.
    double scale = 1.0;   // mu family prefactor
    double e0 = 0.0;      // cheb/leg outer exponent
    struct Term {
        double coef;
        JacobiParams poly;
    };
    std::array<Term, 3> terms;
};

PsiFunction make_psi(ChiFamily family, int N, double mu);

/// True value of Psi_N(x) (includes the fractional power for cheb/leg).
double psi_eval(const PsiFunction& psi, double x);

/// The degree-N polynomial sharing Psi's zeros in (-1,1); identical to
/// psi_eval for the mu family, the factor W for the others. Finite on all of
/// [-1,1], which makes it the right object to bisect.
double psi_poly_eval(const PsiFunction& psi, double x);

/// Large-N approximation of Psi^{1+mu,1-mu}_N:
/// -(N+1) Gamma(N-mu)/N! [ (1+x) P_N'(x) + (N^2+N+1) P_N(x) ].
double psi_approx_eval(int N, double mu, double x);

/// The N zeros of Psi_N in (-1,1), bracketed by consecutive Legendre zeros
/// of P_N augmented with the endpoints (the observed interlacing), refined by
/// bisection to |dx| <= 1e-13. Throws bracketing_error naming the brackets
/// without a sign change if fewer than N roots are found.
Grid superconsistent_nodes(ChiFamily family, int N, double sigma);

/// Closed form of the second derivative of chi_N^{1+mu,1-mu} =
/// (1+x)^{-mu} (1-x^2) d/dx P_N^{mu,-mu}. Singular at x = -1.
double chi_second_deriv(int N, double mu, double x);

/// Second derivative of chi for any family by the product rule on
/// (1+x)^e S(x); cross-checks the closed form for the mu family.
double chi_second_deriv_generic(const ChiFunction& chi, double x);

/// The N-1 roots of -chi_N''(z) + K Psi_N(z) = 0 in (-1,1): the collocation
/// set making the operator -D^2 + K D^sigma superconsistent. Located by a
/// uniform sign scan (`panels` subdivisions) followed by bisection to 1e-13.
/// A root count other than N-1 throws blowup_error carrying the scan trace.
Grid mixed_collocation_nodes(ChiFamily family, int N, double sigma, double K,
                             int panels = 2000);

}  // namespace fracolloc

#endif
