#include "traceforms/report_io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "traceforms/errors.hpp"

namespace tf {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) fail(errc::out_of_range, "cannot open output file " + path);
    os << content;
}

std::string histogram_svg(std::span<const std::size_t> bins, std::size_t total) {
    const int width = 640, height = 360, margin = 20;
    const double bin_width = 4.0 / static_cast<double>(bins.size());
    // Empirical density per bin vs the semicircle density, shared y-scale.
    double ymax = 1.0 / std::numbers::pi;  // density peak at x = 0
    std::vector<double> dens(bins.size(), 0.0);
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (total > 0)
            dens[i] = static_cast<double>(bins[i]) / (static_cast<double>(total) * bin_width);
        ymax = std::max(ymax, dens[i]);
    }
    auto px = [&](double x) {
        return margin + (x + 2.0) / 4.0 * (width - 2 * margin);
    };
    auto py = [&](double y) {
        return height - margin - y / ymax * (height - 2 * margin);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < bins.size(); ++i) {
        const double x0 = -2.0 + static_cast<double>(i) * bin_width;
        svg += "<rect x=\"" + fmt_double(px(x0)) + "\" y=\"" + fmt_double(py(dens[i])) +
               "\" width=\"" + fmt_double(px(x0 + bin_width) - px(x0)) + "\" height=\"" +
               fmt_double(py(0.0) - py(dens[i])) + "\" fill=\"steelblue\"/>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"2\" points=\"";
    for (int i = 0; i <= 200; ++i) {
        const double x = -2.0 + 4.0 * static_cast<double>(i) / 200.0;
        const double y = std::sqrt(std::max(0.0, 4.0 - x * x)) / (2.0 * std::numbers::pi);
        svg += fmt_double(px(x)) + "," + fmt_double(py(y)) + " ";
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

}  // namespace tf
