// Command line front end: bounds, entropies, verification reports, catalog
// sweeps, sampling cross-checks.  Exit codes: 0 ok, 1 bound violation,
// 2 invalid input, 3 numerical failure.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "entrobound/angular.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/maxent_bounds.hpp"
#include "entrobound/quadrature.hpp"
#include "entrobound/report.hpp"
#include "entrobound/sampling.hpp"
#include "entrobound/states.hpp"

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << sep;
        out << v[i];
    }
    return out.str();
}

std::string mu_json(const std::vector<int>& mu) {
    return "[" + join_ints(mu, ",") + "]";
}

std::string join_doubles(const std::vector<double>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += sep;
        out += entrobound::format_double(v[i]);
    }
    return out;
}

std::string matrix_json(const std::vector<double>& m, int d) {
    std::string out = "[";
    for (int i = 0; i < d; ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (int j = 0; j < d; ++j) {
            if (j > 0) out += ",";
            out += entrobound::format_double(m[static_cast<std::size_t>(i) * d + j]);
        }
        out += "]";
    }
    return out + "]";
}

struct StateOpts {
    std::string system = "oscillator";
    std::vector<int> state_qn;
    std::string file_path;
};

void add_state_options(CLI::App* cmd, StateOpts* o) {
    cmd->add_option("--system", o->system, "State family: oscillator, hydrogen, or file")
        ->check(CLI::IsMember({"oscillator", "hydrogen", "file"}));
    cmd->add_option("--state", o->state_qn, "Quantum numbers: n_r,l (oscillator) or n,l (hydrogen)")
        ->delimiter(',');
    cmd->add_option("--file", o->file_path, "Two-column r,R(r) table for --system file");
}

entrobound::RadialState make_state(const StateOpts& o, int d, int l) {
    if (o.system == "file") {
        if (o.file_path.empty())
            throw std::invalid_argument("--system file requires --file PATH");
        return entrobound::tabulated_state_from_file(o.file_path, d, l);
    }
    if (o.state_qn.size() != 2)
        throw std::invalid_argument("--system " + o.system + " requires --state N,L");
    if (o.system == "oscillator")
        return entrobound::oscillator_state(o.state_qn[0], o.state_qn[1], d);
    return entrobound::hydrogen_state(o.state_qn[0], o.state_qn[1], d);
}

entrobound::QuadratureSpec make_spec(int order, double tol) {
    entrobound::QuadratureSpec spec;
    spec.base_order = order;
    spec.rel_tol = tol;
    spec.validate();
    return spec;
}

int run_bound(int d, double lambda, bool have_r2, double r2,
              const std::vector<int>& mu, bool paper_exact, const std::string& format) {
    const entrobound::RenyiOrder order{lambda, d};
    const double bd = entrobound::bd_lambda(order);

    bool have_loss = false;
    double loss = 0.0;
    if (!mu.empty()) {
        entrobound::QuantumNumberChain chain;
        chain.d = d;
        chain.mu = mu;
        loss = entrobound::entropy_loss(chain);
        have_loss = true;
    }

    using entrobound::format_double;
    if (format == "csv") {
        std::string header = "d,lambda,bd_lambda";
        std::string row = std::to_string(d) + "," + format_double(lambda) + "," + format_double(bd);
        if (paper_exact) {
            header += ",bd_lambda_printed";
            row += "," + format_double(entrobound::bd_lambda_paper_printed(order));
        }
        if (have_r2) {
            header += ",r2,bound_baseline";
            row += "," + format_double(r2) + "," +
                   format_double(entrobound::baseline_renyi_bound(order, r2));
        }
        if (have_loss) {
            header += ",mu,loss";
            row += "," + join_ints(mu, " ") + "," + format_double(loss);
        }
        if (have_r2 && have_loss) {
            header += ",bound_improved";
            row += "," + format_double(entrobound::baseline_renyi_bound(order, r2) + loss);
        }
        std::cout << header << "\n" << row << "\n";
        return 0;
    }

    std::string out = "{\"d\":" + std::to_string(d) +
                      ",\"lambda\":" + format_double(lambda) +
                      ",\"bd_lambda\":" + format_double(bd);
    if (paper_exact)
        out += ",\"bd_lambda_printed\":" +
               format_double(entrobound::bd_lambda_paper_printed(order));
    if (have_r2)
        out += ",\"r2\":" + format_double(r2) +
               ",\"bound_baseline\":" + format_double(entrobound::baseline_renyi_bound(order, r2));
    if (have_loss)
        out += ",\"mu\":" + mu_json(mu) + ",\"loss\":" + format_double(loss);
    if (have_r2 && have_loss)
        out += ",\"bound_improved\":" +
               format_double(entrobound::baseline_renyi_bound(order, r2) + loss);
    std::cout << out << "}\n";
    return 0;
}

int run_entropy(const StateOpts& so, int d, const std::vector<int>& mu, double lambda,
                const entrobound::QuadratureSpec& spec, const std::string& format) {
    entrobound::QuantumNumberChain chain;
    chain.d = d;
    chain.mu = mu;
    chain.validate();
    const entrobound::RadialState state = make_state(so, d, chain.l());
    const entrobound::EntropyValue h = entrobound::renyi_total(state, chain, lambda, spec);

    using entrobound::format_double;
    if (format == "csv") {
        std::cout << "system,d,mu,lambda,H,H_method,H_est_error\n"
                  << state.label.text() << "," << d << "," << join_ints(mu, " ") << ","
                  << format_double(lambda) << "," << format_double(h.value) << ","
                  << to_string(h.method) << "," << format_double(h.est_error) << "\n";
        return 0;
    }
    std::cout << "{\"system\":\"" << state.label.text() << "\",\"d\":" << d
              << ",\"mu\":" << mu_json(mu) << ",\"lambda\":" << format_double(lambda)
              << ",\"H\":" << format_double(h.value)
              << ",\"H_method\":\"" << to_string(h.method)
              << "\",\"H_est_error\":" << format_double(h.est_error) << "}\n";
    return 0;
}

int run_verify(const StateOpts& so, int d, const std::vector<int>& mu, double lambda,
               const entrobound::QuadratureSpec& spec, bool paper_exact,
               const std::string& format) {
    entrobound::QuantumNumberChain chain;
    chain.d = d;
    chain.mu = mu;
    chain.validate();
    const entrobound::RadialState state = make_state(so, d, chain.l());
    const entrobound::BoundReport rep =
        entrobound::verify(state, chain, lambda, spec, paper_exact);
    if (format == "csv")
        std::cout << entrobound::csv_header(paper_exact) << "\n"
                  << entrobound::to_csv_row(rep) << "\n";
    else
        std::cout << entrobound::to_json(rep) << "\n";
    return rep.holds ? 0 : 1;
}

int run_sweep(const std::vector<std::string>& systems, const std::vector<int>& dims,
              const std::vector<double>& lambdas, const entrobound::QuadratureSpec& spec,
              bool paper_exact, const std::string& format) {
    const auto cases = entrobound::catalog_sweep_cases(systems, dims);
    const auto cells = entrobound::sweep(cases, lambdas, spec, paper_exact);
    if (format == "csv")
        std::cout << entrobound::to_csv(cells, paper_exact);
    else
        std::cout << entrobound::to_json(cells) << "\n";
    for (const auto& cell : cells)
        if (cell.report && !cell.report->holds) return 1;
    return 0;
}

int run_sample_cov(const StateOpts& so, int d, const std::vector<int>& mu,
                   std::int64_t samples, std::uint64_t seed, const std::string& format) {
    entrobound::QuantumNumberChain chain;
    chain.d = d;
    chain.mu = mu;
    chain.validate();
    if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
    const entrobound::RadialState state = make_state(so, d, chain.l());
    const entrobound::PointCloud cloud =
        entrobound::sample_state(state, chain, static_cast<std::size_t>(samples), seed);
    const entrobound::CovarianceEstimate est = entrobound::empirical_covariance(cloud);
    const entrobound::CorrelationDiagonal ref = entrobound::correlation_diagonal(chain);

    using entrobound::format_double;
    if (format == "csv") {
        std::cout << "i,j,second_moment,c_x\n";
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const std::size_t k = static_cast<std::size_t>(i) * d + j;
                std::cout << i << "," << j << "," << format_double(est.second_moment[k])
                          << "," << format_double(est.normalized[k]) << "\n";
            }
        std::cout << "# c_x_reference: " << join_doubles(ref.entries, " ") << "\n";
        return 0;
    }
    std::cout << "{\"system\":\"" << state.label.text() << "\",\"d\":" << d
              << ",\"mu\":" << mu_json(mu) << ",\"samples\":" << samples
              << ",\"seed\":" << seed
              << ",\"second_moment\":" << matrix_json(est.second_moment, d)
              << ",\"c_x\":" << matrix_json(est.normalized, d)
              << ",\"c_x_diagonal\":[" << join_doubles(est.normalized_diagonal(), ",")
              << "],\"c_x_reference\":[" << join_doubles(ref.entries, ",") << "]}\n";
    return 0;
}

int run_loss(int d, const std::vector<int>& mu, const std::string& format) {
    entrobound::QuantumNumberChain chain;
    chain.d = d;
    chain.mu = mu;
    chain.validate();
    std::vector<double> cos2;
    for (int k = 1; k <= d - 1; ++k)
        cos2.push_back(entrobound::cos2_moment(chain, k));
    const entrobound::CorrelationDiagonal diag = entrobound::correlation_diagonal(chain);
    const double loss = entrobound::entropy_loss(chain);

    using entrobound::format_double;
    if (format == "csv") {
        std::cout << "d,mu,loss,cos2_moments,correlation_diagonal\n"
                  << d << "," << join_ints(mu, " ") << "," << format_double(loss) << ","
                  << join_doubles(cos2, " ") << "," << join_doubles(diag.entries, " ") << "\n";
        return 0;
    }
    std::cout << "{\"d\":" << d << ",\"mu\":" << mu_json(mu)
              << ",\"cos2_moments\":[" << join_doubles(cos2, ",")
              << "],\"correlation_diagonal\":[" << join_doubles(diag.entries, ",")
              << "],\"loss\":" << format_double(loss) << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Renyi entropy bounds for spherically symmetric quantum states"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    bool paper_exact = false;
    app.add_flag("--paper-exact", paper_exact,
                 "Also report the uncorrected published form of the maxent constant");

    int order = 96;
    double tol = 1e-10;
    app.add_option("--order", order, "Base quadrature order")->capture_default_str();
    app.add_option("--tol", tol, "Relative tolerance for quadrature refinement")
        ->capture_default_str();

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "Maxent constant and entropy bounds");
    cmd_bound->fallthrough();
    int b_d = 3;
    double b_lambda = 1.0;
    double b_r2 = 0.0;
    std::vector<int> b_mu;
    cmd_bound->add_option("--d", b_d, "Dimension")->required();
    cmd_bound->add_option("--lambda", b_lambda, "Renyi order")->required();
    auto* b_r2_opt = cmd_bound->add_option("--r2", b_r2, "Radial second moment <r^2>");
    cmd_bound->add_option("--mu", b_mu, "Angular momentum chain (adds the angular loss term)")
        ->delimiter(',');

    // entropy
    auto* cmd_entropy = app.add_subcommand("entropy", "Total Renyi entropy of a state");
    cmd_entropy->fallthrough();
    StateOpts e_state;
    int e_d = 3;
    double e_lambda = 1.0;
    std::vector<int> e_mu;
    add_state_options(cmd_entropy, &e_state);
    cmd_entropy->add_option("--d", e_d, "Dimension")->required();
    cmd_entropy->add_option("--lambda", e_lambda, "Renyi order")->required();
    cmd_entropy->add_option("--mu", e_mu, "Angular momentum chain")->delimiter(',')->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Check the sharp bound for one state");
    cmd_verify->fallthrough();
    StateOpts v_state;
    int v_d = 3;
    double v_lambda = 1.0;
    std::vector<int> v_mu;
    add_state_options(cmd_verify, &v_state);
    cmd_verify->add_option("--d", v_d, "Dimension")->required();
    cmd_verify->add_option("--lambda", v_lambda, "Renyi order")->required();
    cmd_verify->add_option("--mu", v_mu, "Angular momentum chain")->delimiter(',')->required();

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Verify the bound across a state catalog");
    cmd_sweep->fallthrough();
    std::vector<std::string> s_systems;
    std::vector<int> s_dims = {2, 3, 5};
    std::vector<double> s_lambdas = {0.8, 1.0, 1.5, 2.0, 3.0};
    cmd_sweep->add_option("--system", s_systems, "State families (repeatable)")
        ->check(CLI::IsMember({"oscillator", "hydrogen"}));
    cmd_sweep->add_option("--d", s_dims, "Dimensions")->delimiter(',');
    cmd_sweep->add_option("--lambda", s_lambdas, "Renyi orders")->delimiter(',');

    // sample-cov
    auto* cmd_sample = app.add_subcommand("sample-cov", "Monte Carlo covariance cross-check");
    cmd_sample->fallthrough();
    StateOpts c_state;
    int c_d = 3;
    std::vector<int> c_mu;
    std::int64_t c_samples = 100000;
    std::uint64_t c_seed = 1;
    add_state_options(cmd_sample, &c_state);
    cmd_sample->add_option("--d", c_d, "Dimension")->required();
    cmd_sample->add_option("--mu", c_mu, "Angular momentum chain")->delimiter(',')->required();
    cmd_sample->add_option("--samples", c_samples, "Sample count")->capture_default_str();
    cmd_sample->add_option("--seed", c_seed, "RNG seed")->capture_default_str();

    // loss
    auto* cmd_loss = app.add_subcommand("loss", "Angular entropy loss of a harmonic");
    cmd_loss->fallthrough();
    int l_d = 3;
    std::vector<int> l_mu;
    cmd_loss->add_option("--d", l_d, "Dimension")->required();
    cmd_loss->add_option("--mu", l_mu, "Angular momentum chain")->delimiter(',')->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const entrobound::QuadratureSpec spec = make_spec(order, tol);
        if (*cmd_bound)
            return run_bound(b_d, b_lambda, b_r2_opt->count() > 0, b_r2, b_mu, paper_exact,
                             format);
        if (*cmd_entropy) return run_entropy(e_state, e_d, e_mu, e_lambda, spec, format);
        if (*cmd_verify)
            return run_verify(v_state, v_d, v_mu, v_lambda, spec, paper_exact, format);
        if (*cmd_sweep) {
            std::vector<std::string> systems = s_systems;
            if (systems.empty()) systems = {"oscillator", "hydrogen"};
            return run_sweep(systems, s_dims, s_lambdas, spec, paper_exact, format);
        }
        if (*cmd_sample) return run_sample_cov(c_state, c_d, c_mu, c_samples, c_seed, format);
        if (*cmd_loss) return run_loss(l_d, l_mu, format);
    } catch (const entrobound::NonconvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
