#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "oehhg/io.hpp"

// Minimal self-contained SVG line plots. CSV stays the authoritative output;
// these are quick-look renderings only.

namespace oehhg {

struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f6fb2";
    std::string label;
};

struct SvgOptions {
    int width = 860;
    int height = 520;
    bool log_y = false;
    std::string title;
    std::string x_label;
    std::string y_label;
};

inline std::string svg_line_plot(const std::vector<SvgSeries>& series, const SvgOptions& opt) {
    const int ml = 70, mr = 20, mt = opt.title.empty() ? 20 : 40, mb = 50;
    const double pw = opt.width - ml - mr, ph = opt.height - mt - mb;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double y = s.y[i];
            if (opt.log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            if (!std::isfinite(y) || !std::isfinite(s.x[i])) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!(xmax > xmin)) { xmin = 0; xmax = 1; }
    if (!(ymax > ymin)) { ymin = 0; ymax = 1; }

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.width) +
         "\" height=\"" + std::to_string(opt.height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<rect x=\"" + std::to_string(ml) + "\" y=\"" + std::to_string(mt) + "\" width=\"" +
         fmt_double(pw) + "\" height=\"" + fmt_double(ph) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";
    if (!opt.title.empty())
        s += "<text x=\"" + std::to_string(opt.width / 2) +
             "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
             opt.title + "</text>\n";

    // axis ticks
    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        s += "<text x=\"" + fmt_double(px(fx)) + "\" y=\"" + fmt_double(mt + ph + 18) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
             fmt_double(fx) + "</text>\n";
        std::string ylab = opt.log_y ? "1e" + fmt_double(fy) : fmt_double(fy);
        s += "<text x=\"" + fmt_double(ml - 6) + "\" y=\"" + fmt_double(py(fy) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + ylab +
             "</text>\n";
    }
    if (!opt.x_label.empty())
        s += "<text x=\"" + std::to_string(opt.width / 2) + "\" y=\"" +
             std::to_string(opt.height - 10) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
             opt.x_label + "</text>\n";
    if (!opt.y_label.empty())
        s += "<text x=\"16\" y=\"" + std::to_string(mt + static_cast<int>(ph) / 2) +
             "\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 " +
             std::to_string(mt + static_cast<int>(ph) / 2) + ")\" text-anchor=\"middle\">" +
             opt.y_label + "</text>\n";

    int li = 0;
    for (const auto& ser : series) {
        std::string pts;
        for (std::size_t i = 0; i < ser.x.size(); ++i) {
            double y = ser.y[i];
            if (opt.log_y) {
                if (!(y > 0.0)) continue;
                y = std::log10(y);
            }
            if (!std::isfinite(y) || !std::isfinite(ser.x[i])) continue;
            pts += fmt_double(px(ser.x[i])) + "," + fmt_double(py(y)) + " ";
        }
        s += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + ser.color +
             "\" stroke-width=\"1.5\"/>\n";
        if (!ser.label.empty()) {
            s += "<text x=\"" + std::to_string(ml + 10) + "\" y=\"" +
                 std::to_string(mt + 18 + 16 * li) + "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
                 ser.color + "\">" + ser.label + "</text>\n";
            ++li;
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace oehhg
