#include "sfd/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "sfd/cli/cli.hpp"
#include "sfd/cli/svg_chart.hpp"
#include "sfd/dynamics.hpp"
#include "sfd/errors.hpp"
#include "sfd/identities.hpp"
#include "sfd/spectral.hpp"
#include "sfd/system.hpp"

namespace sfd::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<Scheme> schemes_of(const RunConfig& config) {
    if (config.scheme == "both") return {Scheme::order_reduction, Scheme::classical};
    return {parse_scheme(config.scheme)};
}

void check_ns(const std::vector<int>& ns, const char* who) {
    if (ns.empty()) throw DomainError(std::string(who) + ": N list is empty");
    for (int n : ns) {
        if (n < 1 || n + 1 > kMaxEigenDimension) {
            throw DomainError(std::string(who) + ": N = " + std::to_string(n) + " outside [1, " +
                              std::to_string(kMaxEigenDimension - 1) + "]");
        }
    }
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(); }

std::string scheme_label(Scheme s) {
    return s == Scheme::order_reduction ? "order reduction" : "classical";
}

SweepGrid grid_for(const RunConfig& config, int n) {
    SweepGrid g = SweepGrid::defaults(n);
    if (config.beta_min) g.beta_min = *config.beta_min;
    if (config.beta_max) g.beta_max = *config.beta_max;
    g.linear_steps = config.beta_steps;
    g.log_decades = config.log_decades;
    g.points_per_decade = config.points_per_decade;
    g.anchor_eigenvalues = config.anchor_eigenvalues;
    return g;
}

void write_svg(const std::string& path, std::ostream& fallback, const std::vector<Series>& series,
               const ChartOptions& options) {
    OutputTarget target(path, fallback);
    target.stream() << render_svg(series, options, kVersion);
}

}  // namespace

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream&) {
    check_ns(config.ns, "spectrum");
    const std::vector<Scheme> schemes = schemes_of(config);

    struct Item {
        Scheme scheme;
        int n;
    };
    std::vector<Item> items;
    for (Scheme s : schemes)
        for (int n : config.ns) items.push_back({s, n});

    std::vector<SpectrumReport> reports(items.size());
    for_each_index(config.execution(), items.size(), [&](std::size_t i) {
        const SemiDiscreteSystem system(items[i].scheme, items[i].n, config.k);
        reports[i] = spectral_abscissa(system, config.tolerance, Execution::serial);
    });

    auto h_of = [](int n) { return 1.0 / (n + 1); };
    ChartOptions chart{"Maximal real part of eigenvalues", "N", "-max Re(lambda)", true, true};
    std::vector<Series> series;
    for (std::size_t si = 0; si < schemes.size(); ++si) {
        Series s{scheme_label(schemes[si]), {}, {}};
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].scheme != schemes[si]) continue;
            s.x.push_back(items[i].n);
            s.y.push_back(-reports[i].abscissa);
        }
        series.push_back(std::move(s));
    }

    if (config.format == "svg") {
        write_svg(config.out, out, series, chart);
    } else {
        OutputTarget target(config.out, out);
        std::ostream& os = target.stream();
        if (config.format == "json") {
            json j = report_header(config);
            json rows = json::array();
            for (const SpectrumReport& r : reports) {
                rows.push_back({{"scheme", to_string(r.scheme)},
                                {"n", r.n},
                                {"h", h_of(r.n)},
                                {"k", r.k},
                                {"abscissa", r.abscissa},
                                {"max_eigen_residual", r.max_eigen_residual}});
            }
            j["rows"] = rows;
            os << j.dump(2) << '\n';
        } else {
            write_preamble(os, config);
            os << "scheme,N,h,k,abscissa,max_eigen_residual\n";
            for (const SpectrumReport& r : reports) {
                os << to_string(r.scheme) << ',' << r.n << ',' << format_double(h_of(r.n)) << ','
                   << format_double(r.k) << ',' << format_double(r.abscissa) << ','
                   << format_double(r.max_eigen_residual) << '\n';
            }
        }
    }
    if (!config.svg.empty()) write_svg(config.svg, out, series, chart);
    return kExitOk;
}

int cmd_resolvent(const RunConfig& config, std::ostream& out, std::ostream&) {
    check_ns(config.ns, "resolvent");
    std::vector<ResolventSweepReport> reports;
    for (Scheme s : schemes_of(config)) {
        for (int n : config.ns) {
            const SemiDiscreteSystem system(s, n, config.k);
            if (!config.betas.empty())
                reports.push_back(resolvent_sweep(system, config.betas, config.execution()));
            else
                reports.push_back(resolvent_sweep(system, grid_for(config, n), config.execution()));
        }
    }

    ChartOptions chart{"Resolvent norm along the imaginary axis", "beta", "||(i beta - A_h)^-1||",
                       true, true};
    std::vector<Series> series;
    for (const ResolventSweepReport& r : reports) {
        Series s{scheme_label(r.scheme) + " N=" + std::to_string(r.n), {}, {}};
        for (std::size_t i = 0; i < r.beta_grid.size(); ++i) {
            if (r.beta_grid[i] <= 0.0) continue;
            s.x.push_back(r.beta_grid[i]);
            s.y.push_back(r.norms[i]);
        }
        series.push_back(std::move(s));
    }

    if (config.format == "svg") {
        write_svg(config.out, out, series, chart);
    } else {
        OutputTarget target(config.out, out);
        std::ostream& os = target.stream();
        if (config.format == "json") {
            json j = report_header(config);
            json sweeps = json::array();
            for (const ResolventSweepReport& r : reports) {
                sweeps.push_back({{"scheme", to_string(r.scheme)},
                                  {"n", r.n},
                                  {"h", 1.0 / (r.n + 1)},
                                  {"k", r.k},
                                  {"sup_norm", r.sup_norm},
                                  {"argmax_beta", r.argmax_beta},
                                  {"beta", r.beta_grid},
                                  {"norm", r.norms}});
            }
            j["sweeps"] = sweeps;
            os << j.dump(2) << '\n';
        } else {
            write_preamble(os, config);
            os << "scheme,N,k,beta,norm\n";
            for (const ResolventSweepReport& r : reports) {
                for (std::size_t i = 0; i < r.beta_grid.size(); ++i) {
                    os << to_string(r.scheme) << ',' << r.n << ',' << format_double(r.k) << ','
                       << format_double(r.beta_grid[i]) << ',' << format_double(r.norms[i]) << '\n';
                }
            }
            os << '\n' << "scheme,N,k,sup_norm,argmax_beta\n";
            for (const ResolventSweepReport& r : reports) {
                os << to_string(r.scheme) << ',' << r.n << ',' << format_double(r.k) << ','
                   << format_double(r.sup_norm) << ',' << format_double(r.argmax_beta) << '\n';
            }
        }
    }
    if (!config.svg.empty()) write_svg(config.svg, out, series, chart);
    return kExitOk;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream&) {
    if (config.ns.size() != 1) throw DomainError("simulate: exactly one N is required");
    if (config.scheme == "both") throw DomainError("simulate: choose a single scheme");
    const Scheme scheme = parse_scheme(config.scheme);
    const int n = config.ns.front();
    check_ns(config.ns, "simulate");
    const SemiDiscreteSystem system(scheme, n, config.k);
    const Mesh& mesh = system.mesh();

    CVector w0;
    if (config.init == "random") {
        w0 = random_initial_state(n, config.seed);
    } else if (config.init == "sine") {
        w0 = sine_initial_state(mesh);
    } else if (config.init == "zero") {
        w0 = CVector::Zero(n + 1);
    } else if (config.init.rfind("file:", 0) == 0) {
        w0 = load_initial_state(config.init.substr(5), mesh);
    } else {
        throw DomainError("simulate: unknown --init '" + config.init +
                          "' (random, sine, zero or file:<path>)");
    }

    const EnergyTrace trace =
        simulate(system, w0, config.dt, config.t_final, parse_integrator(config.integrator));

    const double e0 = trace.energies.front();
    double max_gap = 0.0;
    for (double g : trace.step_gaps) max_gap = std::max(max_gap, std::abs(g));
    bool nonincreasing = true;
    for (std::size_t i = 1; i < trace.energies.size(); ++i)
        nonincreasing = nonincreasing && trace.energies[i] <= trace.energies[i - 1];

    const double t_end = trace.times.back();
    const double fit_start = config.fit_start.value_or(0.5 * t_end);
    const double fit_end = config.fit_end.value_or(t_end);
    double omega = std::numeric_limits<double>::quiet_NaN();
    if (e0 > 0.0) omega = fit_decay_rate(trace, fit_start, fit_end);

    json summary = report_header(config);
    summary["scheme"] = to_string(scheme);
    summary["n"] = n;
    summary["h"] = mesh.h;
    summary["k"] = config.k;
    summary["omega_fit"] = number_or_null(omega);
    summary["fit_window"] = {fit_start, fit_end};
    summary["energy_initial"] = e0;
    summary["energy_final"] = trace.energies.back();
    summary["max_abs_step_gap"] = max_gap;
    summary["step_gap_relative"] = e0 > 0.0 ? json(max_gap / e0) : json(max_gap);
    summary["energy_nonincreasing"] = nonincreasing;
    summary["steps"] = trace.step_gaps.size();

    ChartOptions chart{"Discrete energy", "t", "E_h(t)", false, true};
    const std::vector<Series> series{{to_string(scheme) + std::string(" N=") + std::to_string(n),
                                      trace.times, trace.energies}};

    if (config.format == "svg") {
        write_svg(config.out, out, series, chart);
    } else if (config.format == "json") {
        OutputTarget target(config.out, out);
        json j = summary;
        json rows = json::array();
        for (std::size_t i = 0; i < trace.times.size(); ++i) {
            rows.push_back({{"t", trace.times[i]},
                            {"energy", trace.energies[i]},
                            {"boundary_abs", std::abs(trace.boundary_values[i])},
                            {"step_gap", i == 0 ? json() : json(trace.step_gaps[i - 1])}});
        }
        j["trace"] = rows;
        target.stream() << j.dump(2) << '\n';
    } else {
        OutputTarget target(config.out, out);
        std::ostream& os = target.stream();
        write_preamble(os, config);
        os << "t,energy,boundary_abs,step_gap\n";
        for (std::size_t i = 0; i < trace.times.size(); ++i) {
            os << format_double(trace.times[i]) << ',' << format_double(trace.energies[i]) << ','
               << format_double(std::abs(trace.boundary_values[i])) << ',';
            if (i > 0) os << format_double(trace.step_gaps[i - 1]);
            os << '\n';
        }
        if (!config.summary.empty()) {
            OutputTarget summary_target(config.summary, out);
            summary_target.stream() << summary.dump(2) << '\n';
        } else if (target.is_file()) {
            std::filesystem::path p = target.path();
            p.replace_extension(".summary.json");
            OutputTarget summary_target(p.string(), out);
            summary_target.stream() << summary.dump(2) << '\n';
        } else {
            os << "# summary: " << summary.dump() << '\n';
        }
    }
    if (!config.svg.empty()) write_svg(config.svg, out, series, chart);
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    IdentitySuiteConfig suite;
    if (!config.ns.empty()) suite.ns = config.ns;
    if (!config.ks.empty()) suite.ks = config.ks;
    suite.samples = config.samples;
    suite.base_seed = config.seed;
    suite.beta = config.beta;
    suite.perturb = config.perturb;
    const std::vector<MultiplierReport> reports = run_identity_suite(suite, config.execution());

    std::size_t failures = 0;
    for (const MultiplierReport& r : reports) failures += r.passed() ? 0 : 1;

    OutputTarget target(config.out, out);
    std::ostream& os = target.stream();
    if (config.format == "json") {
        json j = report_header(config);
        j["passed"] = failures == 0;
        json gaps = json::array();
        for (const MultiplierReport& r : reports) {
            gaps.push_back({{"identity", r.identity},
                            {"n", r.n},
                            {"k", r.k},
                            {"seed", r.seed},
                            {"gap", r.gap},
                            {"scale", r.scale},
                            {"relative", r.relative()},
                            {"tolerance", r.tolerance},
                            {"passed", r.passed()}});
        }
        j["gaps"] = gaps;
        os << j.dump(2) << '\n';
    } else {
        write_preamble(os, config);
        os << "identity,N,k,seed,gap,scale,relative,tolerance,status\n";
        for (const MultiplierReport& r : reports) {
            os << r.identity << ',' << r.n << ',' << format_double(r.k) << ',' << r.seed << ','
               << format_double(r.gap) << ',' << format_double(r.scale) << ','
               << format_double(r.relative()) << ',' << format_double(r.tolerance) << ','
               << (r.passed() ? "pass" : "FAIL") << '\n';
        }
        os << "# " << (reports.size() - failures) << '/' << reports.size() << " passed\n";
    }
    if (failures > 0) {
        err << "verify: " << failures << " of " << reports.size() << " identity checks failed\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_uniformity(const RunConfig& config, std::ostream& out, std::ostream&) {
    check_ns(config.ns, "uniformity");
    std::vector<UniformityRow> rows;
    for (int n : config.ns) {
        const auto row = uniformity_report({n}, config.k, grid_for(config, n), config.execution());
        rows.push_back(row.front());
    }

    ChartOptions chart{"Uniformity in h", "N", "value", true, true};
    std::vector<Series> series(4);
    series[0].label = "-abscissa (order reduction)";
    series[1].label = "-abscissa (classical)";
    series[2].label = "sup resolvent (order reduction)";
    series[3].label = "sup resolvent (classical)";
    for (const UniformityRow& r : rows) {
        for (Series& s : series) s.x.push_back(r.n);
        series[0].y.push_back(-r.abscissa_or);
        series[1].y.push_back(-r.abscissa_cl);
        series[2].y.push_back(r.sup_resolvent_or);
        series[3].y.push_back(r.sup_resolvent_cl);
    }

    if (config.format == "svg") {
        write_svg(config.out, out, series, chart);
    } else {
        OutputTarget target(config.out, out);
        std::ostream& os = target.stream();
        if (config.format == "json") {
            json j = report_header(config);
            json arr = json::array();
            for (const UniformityRow& r : rows) {
                arr.push_back({{"n", r.n},
                               {"h", r.h},
                               {"k", config.k},
                               {"abscissa_or", r.abscissa_or},
                               {"abscissa_cl", r.abscissa_cl},
                               {"sup_norm_or", r.sup_resolvent_or},
                               {"sup_norm_cl", r.sup_resolvent_cl}});
            }
            j["rows"] = arr;
            os << j.dump(2) << '\n';
        } else {
            write_preamble(os, config);
            os << "N,h,abscissa_or,abscissa_cl,sup_resolvent_or,sup_resolvent_cl\n";
            for (const UniformityRow& r : rows) {
                os << r.n << ',' << format_double(r.h) << ',' << format_double(r.abscissa_or) << ','
                   << format_double(r.abscissa_cl) << ',' << format_double(r.sup_resolvent_or) << ','
                   << format_double(r.sup_resolvent_cl) << '\n';
            }
        }
    }
    if (!config.svg.empty()) write_svg(config.svg, out, series, chart);
    return kExitOk;
}

}  // namespace sfd::cli
