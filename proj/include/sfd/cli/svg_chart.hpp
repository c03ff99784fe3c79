#pragma once

#include <string>
#include <vector>

namespace sfd::cli {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    int width = 720;
    int height = 480;
};

/// Standalone SVG line chart. Points that cannot be placed on a log axis
/// (non-positive) or are not finite are dropped. The banner goes into a
/// leading comment.
std::string render_svg(const std::vector<Series>& series, const ChartOptions& options,
                       const std::string& banner);

}  // namespace sfd::cli
