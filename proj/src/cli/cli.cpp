#include "sfd/cli/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "sfd/cli/commands.hpp"
#include "sfd/errors.hpp"

namespace sfd::cli {

namespace {

void add_output_options(CLI::App* sub, RunConfig& c) {
    sub->add_option("--out,-o", c.out, "Output file; standard output when omitted. Relative paths "
                                       "go under $SFD_OUTPUT_DIR when set");
    sub->add_option("--format", c.format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    sub->add_option("--svg", c.svg, "Also write a chart to this file");
    sub->add_flag("--serial", c.serial, "Run the serial reference kernels");
}

void add_grid_options(CLI::App* sub, RunConfig& c) {
    sub->add_option("--beta-min", c.beta_min, "Lower end of the linear beta grid [-2(pi(N+1))^2]");
    sub->add_option("--beta-max", c.beta_max, "Upper end of the linear beta grid [2(pi(N+1))^2]");
    sub->add_option("--beta-steps", c.beta_steps, "Linear grid points")->capture_default_str();
    sub->add_option("--log-decades", c.log_decades, "Decades of the +-10^j tails")->capture_default_str();
    sub->add_option("--points-per-decade", c.points_per_decade)->capture_default_str();
    sub->add_flag("!--no-anchors", c.anchor_eigenvalues,
                  "Do not add the imaginary parts of the eigenvalues to the grid");
    sub->add_option("--betas", c.betas, "Explicit beta list; replaces the grid")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Spectral and energy experiments for finite-difference semi-discretizations of "
                 "the boundary-damped Schrodinger equation",
                 "sfd"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int single_n = 31;

    auto* spectrum = app.add_subcommand("spectrum", "Spectral abscissa against N");
    spectrum->add_option("--scheme", config.scheme, "order_reduction, classical or both");
    spectrum->add_option("--n-list", config.ns, "Comma-separated N values")->delimiter(',');
    spectrum->add_option("--k", config.k, "Boundary gain")->capture_default_str();
    spectrum->add_option("--tol", config.tolerance, "Eigen-residual bound relative to ||A||")
        ->capture_default_str();
    add_output_options(spectrum, config);

    auto* resolvent = app.add_subcommand("resolvent", "Resolvent norm along the imaginary axis");
    resolvent->add_option("--scheme", config.scheme, "order_reduction, classical or both");
    resolvent->add_option("--n-list", config.ns, "Comma-separated N values")->delimiter(',');
    resolvent->add_option("--k", config.k, "Boundary gain")->capture_default_str();
    add_grid_options(resolvent, config);
    add_output_options(resolvent, config);

    auto* simulate = app.add_subcommand("simulate", "Energy decay of W' = A_h W");
    simulate->add_option("--scheme", config.scheme, "order_reduction or classical");
    simulate->add_option("--n", single_n, "Number of interior nodes")->capture_default_str();
    simulate->add_option("--k", config.k, "Boundary gain")->capture_default_str();
    simulate->add_option("--dt", config.dt, "Time step")->capture_default_str();
    simulate->add_option("--t-final", config.t_final, "Final time")->capture_default_str();
    simulate->add_option("--init", config.init, "random, sine, zero or file:<path>")
        ->capture_default_str();
    simulate->add_option("--integrator", config.integrator, "midpoint or modal")
        ->capture_default_str();
    simulate->add_option("--seed", config.seed, "Seed for random initial data")->capture_default_str();
    simulate->add_option("--fit-start", config.fit_start, "Start of the decay fit window [t_final/2]");
    simulate->add_option("--fit-end", config.fit_end, "End of the decay fit window [t_final]");
    simulate->add_option("--summary", config.summary,
                         "JSON summary path [next to --out, or a trailing comment line]");
    add_output_options(simulate, config);

    auto* verify = app.add_subcommand("verify", "Seeded identity suite");
    verify->add_option("--n-list", config.ns, "N values [1,2,7,64,255]")->delimiter(',');
    verify->add_option("--k-list", config.ks, "Gains [0.1,1,10]")->delimiter(',');
    verify->add_option("--samples", config.samples, "Random inputs per configuration")
        ->capture_default_str();
    verify->add_option("--seed", config.seed, "Base seed")->capture_default_str();
    verify->add_option("--beta", config.beta, "Frequency for the functional identities")
        ->capture_default_str();
    verify->add_option("--perturb", config.perturb, "Corrupt one entry of Sigma by this amount");
    bool as_json = false;
    verify->add_flag("--json", as_json, "Machine-readable report");
    verify->add_option("--out,-o", config.out, "Output file; standard output when omitted");
    verify->add_flag("--serial", config.serial, "Run the serial reference kernels");

    auto* uniformity = app.add_subcommand("uniformity", "Abscissae and resolvent sups for both schemes");
    uniformity->add_option("--n-list", config.ns, "N values [15,63,255]")->delimiter(',');
    uniformity->add_option("--k", config.k, "Boundary gain")->capture_default_str();
    add_grid_options(uniformity, config);
    add_output_options(uniformity, config);

    std::vector<std::string> argv_storage{"sfd"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nRun 'sfd --help' for usage.\n";
        return kExitUsage;
    }

    try {
        if (*spectrum) {
            config.command = "spectrum";
            if (spectrum->count("--n-list") == 0) config.ns = {9, 19, 49, 99, 199, 499, 999};
            return cmd_spectrum(config, out, err);
        }
        if (*resolvent) {
            config.command = "resolvent";
            if (resolvent->count("--n-list") == 0) config.ns = {15, 63, 255};
            return cmd_resolvent(config, out, err);
        }
        if (*simulate) {
            config.command = "simulate";
            if (simulate->count("--scheme") == 0) config.scheme = "order_reduction";
            config.ns = {single_n};
            return cmd_simulate(config, out, err);
        }
        if (*verify) {
            config.command = "verify";
            config.scheme = "order_reduction";
            if (as_json) config.format = "json";
            return cmd_verify(config, out, err);
        }
        config.command = "uniformity";
        if (uniformity->count("--n-list") == 0) config.ns = {15, 63, 255};
        return cmd_uniformity(config, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace sfd::cli
