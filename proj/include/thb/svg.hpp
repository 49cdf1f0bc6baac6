#pragma once

#include <string>
#include <utility>
#include <vector>

namespace thb::svg {

struct Series {
    std::vector<std::pair<double, double>> pts;
    std::string color = "#1f77b4";
    double width = 1.5;
    bool dashed = false;
    std::string label;
};

struct Marker {
    double x = 0.0, y = 0.0;
    std::string color = "#d62728";
    std::string label;
};

/// Self-contained line plot with axes, tick labels, series legend and point
/// markers. No external assets.
std::string plot(const std::vector<Series>& series, const std::vector<Marker>& markers,
                 const std::string& title, const std::string& xlabel,
                 const std::string& ylabel);

/// Space-time heatmap: rows[frame][node], frame times in t. Downsampled to a
/// bounded number of rectangles.
std::string heatmap(const std::vector<double>& t,
                    const std::vector<std::vector<double>>& rows,
                    const std::string& title, const std::string& xlabel,
                    const std::string& ylabel);

}  // namespace thb::svg
