#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sfd/execution.hpp"

namespace sfd::cli {

inline constexpr const char* kVersion = "sfd 1.0.0";

/// Name of the environment variable holding the default output directory.
inline constexpr const char* kOutputDirEnv = "SFD_OUTPUT_DIR";

/// Everything a command needs; echoed verbatim into every report.
struct RunConfig {
    std::string command;
    std::string scheme = "both";  // order_reduction | classical | both
    std::vector<int> ns;
    double k = 1.0;
    std::vector<double> ks;  // verify only

    // Resolvent grid.
    std::optional<double> beta_min;
    std::optional<double> beta_max;
    int beta_steps = 201;
    int log_decades = 6;
    int points_per_decade = 4;
    bool anchor_eigenvalues = true;
    std::vector<double> betas;  // explicit grid overrides the parameters above

    // Simulation.
    double dt = 1e-3;
    double t_final = 5.0;
    std::string init = "random";  // random | sine | zero | file:<path>
    std::string integrator = "midpoint";
    std::optional<double> fit_start;
    std::optional<double> fit_end;

    // Verification.
    int samples = 100;
    double beta = 3.7;
    double perturb = 0.0;

    std::uint64_t seed = 20240601;
    double tolerance = 1e-8;  // eigen-residual bound
    std::string out;          // empty: standard output
    std::string format = "csv";
    std::string svg;
    std::string summary;
    bool serial = false;

    [[nodiscard]] Execution execution() const { return serial ? Execution::serial : Execution::parallel; }
};

nlohmann::ordered_json to_json(const RunConfig& config);

/// Shortest decimal form that round-trips (%.17g trimmed).
std::string format_double(double value);

/// "# sfd <version>" and "# config: {...}" lines preceding the CSV header.
void write_preamble(std::ostream& os, const RunConfig& config);

/// {"version": ..., "config": ...} to be extended by each command.
nlohmann::ordered_json report_header(const RunConfig& config);

/// Relative paths are placed under $SFD_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::string& path);

/// Output file (parent directories created) or the fallback stream.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback);

    [[nodiscard]] std::ostream& stream() { return file_ ? *file_ : fallback_; }
    [[nodiscard]] bool is_file() const { return file_.has_value(); }
    [[nodiscard]] const std::filesystem::path& path() const { return path_; }

private:
    std::ostream& fallback_;
    std::optional<std::ofstream> file_;
    std::filesystem::path path_;
};

}  // namespace sfd::cli
