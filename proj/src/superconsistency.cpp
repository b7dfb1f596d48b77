#include "fracolloc/superconsistency.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace fracolloc {

namespace {

void require_mu(double mu, const char* where) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument(std::string(where) + ": mu must lie in (0,1)");
}

// Gamma(z) / Gamma(z + mu) for positive z, via lgamma.
double gamma_shift_ratio(double z, double mu) {
    return std::exp(std::lgamma(z) - std::lgamma(z + mu));
}

// Recurrence coefficients of the (1+mu,1-mu) family at degree N:
// P_N = (a x + b) P_{N-1} + c P_{N-2}.
struct MuRec {
    double a, b, c;
};
MuRec mu_recurrence(int N, double mu) {
    const double n = N;
    return {(n + 1.0) * (2.0 * n + 1.0) / (n * (n + 2.0)),
            mu * (2.0 * n + 1.0) / (n * n * (n + 2.0)),
            -(n * n - mu * mu) * (n + 1.0) / (n * n * (n + 2.0))};
}

double bisect_to(const std::function<double(double)>& f, double lo, double hi, double flo,
                 double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0)
            hi = mid;
        else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ChiFunction make_chi(ChiFamily family, int N, double mu) {
    if (N < 2) throw std::invalid_argument("make_chi: N must be >= 2");
    require_mu(mu, "make_chi");

    ChiFunction chi{family, N, mu, 0.0, {}};
    const double n = N;
    switch (family) {
        case ChiFamily::cheb: {
            // (1-x) P_{N-1}^{1/2,1/2} resolved through the ultraspherical recurrence.
            chi.exponent = 0.5;
            chi.terms = {{{1.0, {N - 1, 0.5, 0.5}},
                          {-(n + 1.0) / (2.0 * n + 1.0), {N, 0.5, 0.5}},
                          {-(2.0 * n - 1.0) / (4.0 * n), {N - 2, 0.5, 0.5}}}};
            break;
        }
        case ChiFamily::leg: {
            chi.exponent = 1.0;
            chi.terms = {{{1.0, {N - 1, 1.0, 1.0}},
                          {-n * (n + 2.0) / ((n + 1.0) * (2.0 * n + 1.0)), {N, 1.0, 1.0}},
                          {-n / (2.0 * n + 1.0), {N - 2, 1.0, 1.0}}}};
            break;
        }
        case ChiFamily::mu: {
            chi.exponent = 1.0 - mu;
            const MuRec r = mu_recurrence(N, mu);
            const double half = 0.5 * (n + 1.0);
            chi.terms = {{{half * (1.0 + r.b / r.a), {N - 1, 1.0 + mu, 1.0 - mu}},
                          {-half / r.a, {N, 1.0 + mu, 1.0 - mu}},
                          {half * r.c / r.a, {N - 2, 1.0 + mu, 1.0 - mu}}}};
            break;
        }
    }
    return chi;
}

double chi_eval(const ChiFunction& chi, double x) {
    double s = 0.0;
    for (const auto& t : chi.terms) s += t.coef * jacobi_eval(t.poly, x);
    return std::pow(1.0 + x, chi.exponent) * s;
}

double chi_eval_product(const ChiFunction& chi, double x) {
    switch (chi.family) {
        case ChiFamily::cheb:
            return std::pow(1.0 + x, 0.5) * (1.0 - x) * jacobi_eval({chi.N - 1, 0.5, 0.5}, x);
        case ChiFamily::leg:
            return (1.0 + x) * (1.0 - x) * jacobi_eval({chi.N - 1, 1.0, 1.0}, x);
        case ChiFamily::mu:
            return 0.5 * (chi.N + 1.0) * std::pow(1.0 + x, 1.0 - chi.mu) * (1.0 - x) *
                   jacobi_eval({chi.N - 1, 1.0 + chi.mu, 1.0 - chi.mu}, x);
    }
    return 0.0;
}

PsiFunction make_psi(ChiFamily family, int N, double mu) {
    if (N < 2) throw std::invalid_argument("make_psi: N must be >= 2");
    require_mu(mu, "make_psi");

    PsiFunction psi{family, N, mu, 1.0, 0.0, {}};
    const double n = N;
    switch (family) {
        case ChiFamily::mu: {
            // Psi = scale * d/dx[(1+x) q'], q a three-term Legendre combination.
            const MuRec r = mu_recurrence(N, mu);
            psi.scale = (n + 1.0) * gamma_ratio_n_mu(N, mu) / (n - mu);  // (N+1)G(N-mu)/N!
            psi.terms = {{{(1.0 + r.b / r.a) * (n - mu) / (n + 1.0), {N, 0.0, 0.0}},
                          {-(n + 1.0 - mu) * (n - mu) / (r.a * (n + 2.0) * (n + 1.0)),
                           {N + 1, 0.0, 0.0}},
                          {r.c / r.a, {N - 1, 0.0, 0.0}}}};
            break;
        }
        case ChiFamily::cheb: {
            psi.e0 = 0.5 + mu;
            psi.terms = {{{gamma_shift_ratio(n + 0.5, mu), {N - 1, 0.5 - mu, 0.5 + mu}},
                          {-(n + 1.0) / (2.0 * n + 1.0) * gamma_shift_ratio(n + 1.5, mu),
                           {N, 0.5 - mu, 0.5 + mu}},
                          {-(2.0 * n - 1.0) / (4.0 * n) * gamma_shift_ratio(n - 0.5, mu),
                           {N - 2, 0.5 - mu, 0.5 + mu}}}};
            break;
        }
        case ChiFamily::leg: {
            psi.e0 = 1.0 + mu;
            psi.terms = {{{gamma_shift_ratio(n + 1.0, mu), {N - 1, 1.0 - mu, 1.0 + mu}},
                          {-n * (n + 2.0) / ((n + 1.0) * (2.0 * n + 1.0)) *
                               gamma_shift_ratio(n + 2.0, mu),
                           {N, 1.0 - mu, 1.0 + mu}},
                          {-n / (2.0 * n + 1.0) * gamma_shift_ratio(n, mu),
                           {N - 2, 1.0 - mu, 1.0 + mu}}}};
            break;
        }
    }
    return psi;
}

double psi_poly_eval(const PsiFunction& psi, double x) {
    if (psi.family == ChiFamily::mu) {
        // scale * (q' + (1+x) q'')
        double qp = 0.0, qpp = 0.0;
        for (const auto& t : psi.terms) {
            qp += t.coef * jacobi_deriv(t.poly, x, 1);
            qpp += t.coef * jacobi_deriv(t.poly, x, 2);
        }
        return psi.scale * (qp + (1.0 + x) * qpp);
    }
    // d/dx[(1+x)^{e0} G] = (1+x)^{e0-1} [e0 G + (1+x) G']; the bracket W is
    // the polynomial part.
    double g = 0.0, gp = 0.0;
    for (const auto& t : psi.terms) {
        g += t.coef * jacobi_eval(t.poly, x);
        gp += t.coef * jacobi_deriv(t.poly, x, 1);
    }
    return psi.e0 * g + (1.0 + x) * gp;
}

double psi_eval(const PsiFunction& psi, double x) {
    if (psi.family == ChiFamily::mu) return psi_poly_eval(psi, x);
    return std::pow(1.0 + x, psi.e0 - 1.0) * psi_poly_eval(psi, x);
}

double psi_approx_eval(int N, double mu, double x) {
    require_mu(mu, "psi_approx_eval");
    const double c = (N + 1.0) * gamma_ratio_n_mu(N, mu) / (N - mu);  // (N+1)G(N-mu)/N!
    return -c * ((1.0 + x) * jacobi_deriv({N, 0.0, 0.0}, x, 1) +
                 (N * N + N + 1.0) * jacobi_eval({N, 0.0, 0.0}, x));
}

Grid superconsistent_nodes(ChiFamily family, int N, double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("superconsistent_nodes: sigma must lie in (0,1)");
    const double mu = 1.0 - sigma;
    const PsiFunction psi = make_psi(family, N, mu);
    auto f = [&](double x) { return psi_poly_eval(psi, x); };

    std::vector<double> brackets = legendre_zeros(N).nodes;
    brackets.insert(brackets.begin(), -1.0);
    brackets.push_back(1.0);

    std::vector<double> roots;
    std::vector<std::pair<double, double>> empty_brackets;
    for (std::size_t i = 0; i + 1 < brackets.size(); ++i) {
        const double lo = brackets[i], hi = brackets[i + 1];
        const double flo = f(lo), fhi = f(hi);
        if (flo == 0.0) {
            roots.push_back(lo);
        } else if (flo * fhi < 0.0) {
            roots.push_back(bisect_to(f, lo, hi, flo, 1e-13));
        } else {
            empty_brackets.emplace_back(lo, hi);
        }
    }
    if (static_cast<int>(roots.size()) != N) {
        std::ostringstream msg;
        msg << "superconsistent_nodes: interlacing failure, found " << roots.size()
            << " of " << N << " roots; brackets without sign change:";
        for (auto [lo, hi] : empty_brackets) msg << " [" << lo << ", " << hi << "]";
        throw bracketing_error(msg.str());
    }

    GridFamily fam{NodeFamilyKind::psi_zeros};
    fam.sigma = sigma;
    fam.chi = family;
    Grid g = make_grid(std::move(roots), GridRole::collocation, fam);
    return g;
}

double chi_second_deriv(int N, double mu, double x) {
    require_mu(mu, "chi_second_deriv");
    if (std::abs(1.0 + x) < 1e-10)
        throw std::domain_error("chi_second_deriv: singular at x = -1");
    const JacobiParams p{N, mu, -mu};
    const double dp = jacobi_deriv(p, x, 1);
    const double pv = jacobi_eval(p, x);
    const double d2p = jacobi_deriv(p, x, 2);
    const double nn1 = N * (N + 1.0);
    double s = std::pow(1.0 + x, -mu - 2.0) *
               (mu * (mu + 1.0) * (1.0 - x * x) - 4.0 * mu * mu * (1.0 + x) -
                nn1 * (1.0 + x) * (1.0 + x)) *
               dp;
    s += 2.0 * mu * nn1 * std::pow(1.0 + x, -mu - 1.0) * pv;
    s += 2.0 * mu * std::pow(1.0 + x, -mu) * d2p;
    return s;
}

double chi_second_deriv_generic(const ChiFunction& chi, double x) {
    if (std::abs(1.0 + x) < 1e-10)
        throw std::domain_error("chi_second_deriv_generic: singular at x = -1");
    const double e = chi.exponent;
    double s = 0.0, sp = 0.0, spp = 0.0;
    for (const auto& t : chi.terms) {
        s += t.coef * jacobi_eval(t.poly, x);
        sp += t.coef * jacobi_deriv(t.poly, x, 1);
        spp += t.coef * jacobi_deriv(t.poly, x, 2);
    }
    return e * (e - 1.0) * std::pow(1.0 + x, e - 2.0) * s +
           2.0 * e * std::pow(1.0 + x, e - 1.0) * sp + std::pow(1.0 + x, e) * spp;
}

Grid mixed_collocation_nodes(ChiFamily family, int N, double sigma, double K, int panels) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw std::invalid_argument("mixed_collocation_nodes: sigma must lie in (0,1)");
    if (panels < 16) throw std::invalid_argument("mixed_collocation_nodes: too few panels");
    const double mu = 1.0 - sigma;
    const ChiFunction chi = make_chi(family, N, mu);
    const PsiFunction psi = make_psi(family, N, mu);

    auto f = [&](double z) {
        const double d2 = family == ChiFamily::mu ? chi_second_deriv(N, mu, z)
                                                  : chi_second_deriv_generic(chi, z);
        return -d2 + K * psi_eval(psi, z);
    };

    // chi'' blows up like (1+z)^{e-2} at the left endpoint, so the scan stays
    // clear of -1; roots live strictly inside the interval.
    const double lo = -1.0 + 1e-6, hi = 1.0 - 1e-12;
    std::vector<double> roots;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= panels; ++i) {
        const double x = lo + (hi - lo) * i / panels;
        const double fx = f(x);
        if (prev_f == 0.0)
            roots.push_back(prev_x);
        else if (prev_f * fx < 0.0)
            roots.push_back(bisect_to(f, prev_x, x, prev_f, 1e-13));
        prev_x = x;
        prev_f = fx;
    }

    if (static_cast<int>(roots.size()) != N - 1) {
        std::ostringstream msg;
        msg << "mixed_collocation_nodes: blow-up at N=" << N << " sigma=" << sigma
            << " K=" << K << ": sign scan over " << panels << " panels located "
            << roots.size() << " roots (expected " << N - 1 << ") at:";
        for (double r : roots) msg << " " << r;
        throw blowup_error(msg.str());
    }

    GridFamily fam{NodeFamilyKind::mixed_zeros};
    fam.sigma = sigma;
    fam.K = K;
    fam.chi = family;
    return make_grid(std::move(roots), GridRole::collocation, fam);
}

}  // namespace fracolloc
