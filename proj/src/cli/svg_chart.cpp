#include "sfd/cli/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace sfd::cli {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

struct Axis {
    bool log = false;
    double lo = 0.0;  // in transformed units
    double hi = 1.0;

    [[nodiscard]] double transform(double v) const { return log ? std::log10(v) : v; }
    [[nodiscard]] bool accepts(double v) const { return std::isfinite(v) && (!log || v > 0.0); }
};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v, bool log) {
    char buf[32];
    if (log) {
        std::snprintf(buf, sizeof buf, "1e%d", static_cast<int>(std::lround(v)));
    } else {
        std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
    }
    return buf;
}

void fit_range(Axis& axis, double lo, double hi) {
    if (!(lo <= hi)) {
        lo = 0.0;
        hi = 1.0;
    }
    if (axis.log) {
        axis.lo = std::floor(lo);
        axis.hi = std::ceil(hi);
        if (axis.hi <= axis.lo) axis.hi = axis.lo + 1.0;
        return;
    }
    if (hi - lo < 1e-300) {
        const double pad = std::max(std::abs(lo) * 0.1, 1.0);
        lo -= pad;
        hi += pad;
    }
    axis.lo = lo;
    axis.hi = hi;
}

std::vector<double> ticks(const Axis& axis) {
    std::vector<double> out;
    if (axis.log) {
        const double span = axis.hi - axis.lo;
        const double stride = std::max(1.0, std::ceil(span / 8.0));
        for (double t = axis.lo; t <= axis.hi + 1e-9; t += stride) out.push_back(t);
        return out;
    }
    const double raw = (axis.hi - axis.lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double f : {1.0, 2.0, 5.0, 10.0}) {
        step = f * mag;
        if (step >= raw) break;
    }
    for (double t = std::ceil(axis.lo / step) * step; t <= axis.hi + 1e-9 * step; t += step)
        out.push_back(t);
    return out;
}

}  // namespace

std::string render_svg(const std::vector<Series>& series, const ChartOptions& options,
                       const std::string& banner) {
    const double left = 80, right = 160, top = 40, bottom = 60;
    const double w = options.width, h = options.height;
    const double pw = w - left - right, ph = h - top - bottom;

    Axis ax{options.log_x}, ay{options.log_y};
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo, ylo = xlo, yhi = -xlo;
    for (const Series& s : series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!ax.accepts(s.x[i]) || !ay.accepts(s.y[i])) continue;
            xlo = std::min(xlo, ax.transform(s.x[i]));
            xhi = std::max(xhi, ax.transform(s.x[i]));
            ylo = std::min(ylo, ay.transform(s.y[i]));
            yhi = std::max(yhi, ay.transform(s.y[i]));
        }
    }
    fit_range(ax, xlo, xhi);
    fit_range(ay, ylo, yhi);

    auto px = [&](double v) { return left + (ax.transform(v) - ax.lo) / (ax.hi - ax.lo) * pw; };
    auto py = [&](double v) { return top + ph - (ay.transform(v) - ay.lo) / (ay.hi - ay.lo) * ph; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<!-- " << escape(banner) << " -->\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
        << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(options.title) << "</text>\n";

    for (double t : ticks(ax)) {
        const double x = left + (t - ax.lo) / (ax.hi - ax.lo) * pw;
        svg << "<line x1=\"" << num(x) << "\" y1=\"" << num(top) << "\" x2=\"" << num(x) << "\" y2=\""
            << num(top + ph) << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << num(x) << "\" y=\"" << num(top + ph + 18)
            << "\" text-anchor=\"middle\">" << tick_label(t, ax.log) << "</text>\n";
    }
    for (double t : ticks(ay)) {
        const double y = top + ph - (t - ay.lo) / (ay.hi - ay.lo) * ph;
        svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(y) << "\" x2=\"" << num(left + pw)
            << "\" y2=\"" << num(y) << "\" stroke=\"#e0e0e0\"/>\n";
        svg << "<text x=\"" << num(left - 8) << "\" y=\"" << num(y + 4)
            << "\" text-anchor=\"end\">" << tick_label(t, ay.log) << "</text>\n";
    }
    svg << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw)
        << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(h - 16)
        << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << num(top + ph / 2) << ")\">" << escape(options.y_label) << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const Series& s = series[si];
        const char* color = kPalette[si % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!ax.accepts(s.x[i]) || !ay.accepts(s.y[i])) continue;
            svg << (first ? "" : " ") << num(px(s.x[i])) << ',' << num(py(s.y[i]));
            first = false;
        }
        svg << "\"/>\n";
        const double ly = top + 16 + 20.0 * static_cast<double>(si);
        svg << "<line x1=\"" << num(left + pw + 12) << "\" y1=\"" << num(ly) << "\" x2=\""
            << num(left + pw + 36) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << num(left + pw + 42) << "\" y=\"" << num(ly + 4) << "\">"
            << escape(s.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace sfd::cli
