#include "sfd/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "sfd/errors.hpp"

namespace sfd::cli {

nlohmann::ordered_json to_json(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["command"] = c.command;
    j["scheme"] = c.scheme;
    j["n"] = c.ns;
    j["k"] = c.k;
    if (!c.ks.empty()) j["k_list"] = c.ks;
    j["beta_min"] = c.beta_min ? nlohmann::ordered_json(*c.beta_min) : nlohmann::ordered_json();
    j["beta_max"] = c.beta_max ? nlohmann::ordered_json(*c.beta_max) : nlohmann::ordered_json();
    j["beta_steps"] = c.beta_steps;
    j["log_decades"] = c.log_decades;
    j["points_per_decade"] = c.points_per_decade;
    j["anchor_eigenvalues"] = c.anchor_eigenvalues;
    j["betas"] = c.betas;
    j["dt"] = c.dt;
    j["t_final"] = c.t_final;
    j["init"] = c.init;
    j["integrator"] = c.integrator;
    j["fit_start"] = c.fit_start ? nlohmann::ordered_json(*c.fit_start) : nlohmann::ordered_json();
    j["fit_end"] = c.fit_end ? nlohmann::ordered_json(*c.fit_end) : nlohmann::ordered_json();
    j["samples"] = c.samples;
    j["beta"] = c.beta;
    j["perturb"] = c.perturb;
    j["seed"] = c.seed;
    j["tolerance"] = c.tolerance;
    j["out"] = c.out;
    j["format"] = c.format;
    j["svg"] = c.svg;
    j["summary"] = c.summary;
    j["serial"] = c.serial;
    return j;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
}

void write_preamble(std::ostream& os, const RunConfig& config) {
    os << "# " << kVersion << '\n';
    os << "# config: " << to_json(config).dump() << '\n';
}

nlohmann::ordered_json report_header(const RunConfig& config) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["config"] = to_json(config);
    return j;
}

std::filesystem::path resolve_output_path(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
            p = std::filesystem::absolute(dir) / p;
    }
    return p;
}

OutputTarget::OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path.empty() || path == "-") return;
    path_ = resolve_output_path(path);
    if (path_.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
    }
    file_.emplace(path_);
    if (!*file_) throw DomainError("cannot open output file '" + path_.string() + "'");
}

}  // namespace sfd::cli
