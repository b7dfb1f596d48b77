#include "fracolloc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fracolloc/oracle.hpp"
#include "fracolloc/superconsistency.hpp"
#include "fracolloc/tables.hpp"

namespace fracolloc {

namespace {

bool log_enabled() {
    const char* v = std::getenv("FRACOLLOC_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_info(const std::string& msg) {
    if (log_enabled()) std::cerr << "[fracolloc] " << msg << "\n";
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << content;
}

ChiFamily parse_family(const std::string& s) {
    if (s == "cheb") return ChiFamily::cheb;
    if (s == "leg") return ChiFamily::leg;
    if (s == "mu") return ChiFamily::mu;
    throw std::invalid_argument("family must be cheb, leg or mu");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"fracolloc: fractional spectral collocation on Jacobi bases"};
    app.set_config("--config", "", "key=value configuration file; flags win");

    std::string command;
    app.add_option("--command", command, "table1|table2|table3|fig1|nodes|matrix")
        ->required();
    std::string n_list, n_range, sigma_list;
    app.add_option("--N", n_list, "comma-separated N values");
    app.add_option("--N-range", n_range, "inclusive range lo:hi");
    app.add_option("--sigma", sigma_list, "derivative order(s), comma-separated");
    double K = 10.0;
    app.add_option("--K", K, "advection coefficient");
    bool K_given = false;
    double mu = 0.5;
    app.add_option("--mu", mu, "basis exponent / weight parameter in (0,1)");
    std::string mu_list;
    app.add_option("--mu-list", mu_list, "comma-separated mu sweep (nodes command)");
    std::string family_s = "mu";
    app.add_option("--family", family_s, "test-function family: cheb|leg|mu");
    std::string choices;
    app.add_option("--choices", choices, "accepted for scripting compatibility");
    std::string out_path = "-";
    app.add_option("--out", out_path, "output file, - for stdout");
    int mesh_points = 201;
    app.add_option("--mesh-points", mesh_points, "evaluation mesh size (fig1)");
    int n_ref = 50;
    app.add_option("--N-ref", n_ref, "reference resolution for the error tables");
    std::string matrix_kind = "frac";
    app.add_option("--matrix-kind", matrix_kind, "A|frac|second|advdiff");
    long seed = 0;
    app.add_option("--seed", seed, "reserved");

    try {
        std::vector<const char*> argv;
        argv.push_back("fracolloc");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
        K_given = app.count("--K") > 0;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::vector<int> Ns;
        if (!n_list.empty()) Ns = parse_int_list(n_list);
        if (!n_range.empty()) {
            const auto pos = n_range.find(':');
            if (pos == std::string::npos)
                throw std::invalid_argument("--N-range must look like lo:hi");
            const int lo = std::stoi(n_range.substr(0, pos));
            const int hi = std::stoi(n_range.substr(pos + 1));
            if (lo > hi) throw std::invalid_argument("--N-range: lo exceeds hi");
            for (int n = lo; n <= hi; ++n) Ns.push_back(n);
        }
        std::vector<double> sigmas;
        if (!sigma_list.empty()) sigmas = parse_double_list(sigma_list);

        if (command == "table1") {
            if (Ns.empty()) Ns = {5, 10, 20, 50, 100};
            log_info("table1: mu=" + std::to_string(mu));
            write_output(out_path, table1_csv(mu, Ns));
            return 0;
        }
        if (command == "table2" || command == "table3") {
            if (Ns.empty())
                for (int n = 4; n <= 15; ++n) Ns.push_back(n);
            const double sigma = sigmas.empty() ? 0.5 : sigmas.front();
            if (!(sigma > 0.0 && sigma < 1.0))
                throw std::invalid_argument("sigma must lie in (0,1)");
            log_info(command + ": sigma=" + std::to_string(sigma) +
                     " N_ref=" + std::to_string(n_ref));
            TableResult res = command == "table2" ? table2_csv(sigma, Ns, n_ref)
                                                  : table3_csv(sigma, K, Ns, n_ref);
            for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
            write_output(out_path, res.csv);
            return res.complete ? 0 : 3;
        }
        if (command == "fig1") {
            if (sigmas.empty()) {
                for (int k = 1; k <= 9; ++k) sigmas.push_back(k / 10.0);
                for (int k = 1; k <= 9; ++k) sigmas.push_back(1.0 + k / 10.0);
            }
            const int N = Ns.empty() ? 19 : Ns.front();
            log_info("fig1: N=" + std::to_string(N) + ", " +
                     std::to_string(sigmas.size()) + " orders");
            write_output(out_path, fig1_csv(N, sigmas, mesh_points));
            return 0;
        }
        if (command == "nodes") {
            const ChiFamily family = parse_family(family_s);
            const int N = Ns.empty() ? 5 : Ns.front();
            std::vector<double> mus =
                mu_list.empty() ? std::vector<double>{mu} : parse_double_list(mu_list);
            log_info("nodes: family=" + family_s + " N=" + std::to_string(N));
            write_output(out_path, nodes_csv(family, N, mus, K_given, K));
            return 0;
        }
        if (command == "matrix") {
            const int N = Ns.empty() ? 8 : Ns.front();
            const double sigma = sigmas.empty() ? 0.5 : sigmas.front();
            log_info("matrix: kind=" + matrix_kind + " N=" + std::to_string(N));
            write_output(out_path, matrix_csv(matrix_kind, N, sigma, K));
            return 0;
        }
        throw std::invalid_argument("unknown command: " + command);
    } catch (const blowup_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const bracketing_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const oracle::tolerance_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace fracolloc
