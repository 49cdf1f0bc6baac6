#include "thb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace thb::svg {

namespace {

constexpr int kW = 720, kH = 480;
constexpr int kMarginL = 70, kMarginR = 20, kMarginT = 40, kMarginB = 50;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double x) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    void pad() {
        if (!(lo < hi)) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double m = 0.05 * (hi - lo);
        lo -= m;
        hi += m;
    }
};

struct Frame {
    Range xr, yr;
    double px(double x) const { return kMarginL + (x - xr.lo) / (xr.hi - xr.lo) * (kW - kMarginL - kMarginR); }
    double py(double y) const { return kH - kMarginB - (y - yr.lo) / (yr.hi - yr.lo) * (kH - kMarginT - kMarginB); }
};

void axes(std::ostringstream& out, const Frame& fr, const std::string& title,
          const std::string& xlabel, const std::string& ylabel) {
    out << "<rect x='" << kMarginL << "' y='" << kMarginT << "' width='"
        << kW - kMarginL - kMarginR << "' height='" << kH - kMarginT - kMarginB
        << "' fill='none' stroke='#333'/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = fr.xr.lo + (fr.xr.hi - fr.xr.lo) * i / 5.0;
        const double fy = fr.yr.lo + (fr.yr.hi - fr.yr.lo) * i / 5.0;
        out << "<text x='" << fr.px(fx) << "' y='" << kH - kMarginB + 18
            << "' font-size='11' text-anchor='middle'>" << num(fx) << "</text>\n";
        out << "<text x='" << kMarginL - 6 << "' y='" << fr.py(fy) + 4
            << "' font-size='11' text-anchor='end'>" << num(fy) << "</text>\n";
        out << "<line x1='" << fr.px(fx) << "' y1='" << kH - kMarginB << "' x2='" << fr.px(fx)
            << "' y2='" << kH - kMarginB + 4 << "' stroke='#333'/>\n";
        out << "<line x1='" << kMarginL - 4 << "' y1='" << fr.py(fy) << "' x2='" << kMarginL
            << "' y2='" << fr.py(fy) << "' stroke='#333'/>\n";
    }
    out << "<text x='" << (kMarginL + kW - kMarginR) / 2 << "' y='20' font-size='14' "
        << "text-anchor='middle'>" << title << "</text>\n";
    out << "<text x='" << (kMarginL + kW - kMarginR) / 2 << "' y='" << kH - 12
        << "' font-size='12' text-anchor='middle'>" << xlabel << "</text>\n";
    out << "<text x='16' y='" << (kMarginT + kH - kMarginB) / 2
        << "' font-size='12' text-anchor='middle' transform='rotate(-90 16 "
        << (kMarginT + kH - kMarginB) / 2 << ")'>" << ylabel << "</text>\n";
}

std::string header() {
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH
        << "' viewBox='0 0 " << kW << ' ' << kH << "'>\n"
        << "<rect width='" << kW << "' height='" << kH << "' fill='white'/>\n"
        << "<g font-family='sans-serif'>\n";
    return out.str();
}

}  // namespace

std::string plot(const std::vector<Series>& series, const std::vector<Marker>& markers,
                 const std::string& title, const std::string& xlabel,
                 const std::string& ylabel) {
    Frame fr;
    for (const Series& s : series)
        for (const auto& [x, y] : s.pts) {
            fr.xr.add(x);
            fr.yr.add(y);
        }
    for (const Marker& m : markers) {
        fr.xr.add(m.x);
        fr.yr.add(m.y);
    }
    fr.xr.pad();
    fr.yr.pad();

    std::ostringstream out;
    out << header();
    axes(out, fr, title, xlabel, ylabel);
    int legend_y = kMarginT + 16;
    for (const Series& s : series) {
        out << "<polyline fill='none' stroke='" << s.color << "' stroke-width='" << s.width
            << "'" << (s.dashed ? " stroke-dasharray='6 4'" : "") << " points='";
        for (const auto& [x, y] : s.pts) out << num(fr.px(x)) << ',' << num(fr.py(y)) << ' ';
        out << "'/>\n";
        if (!s.label.empty()) {
            out << "<line x1='" << kW - kMarginR - 130 << "' y1='" << legend_y << "' x2='"
                << kW - kMarginR - 110 << "' y2='" << legend_y << "' stroke='" << s.color
                << "' stroke-width='2'" << (s.dashed ? " stroke-dasharray='6 4'" : "") << "/>\n"
                << "<text x='" << kW - kMarginR - 105 << "' y='" << legend_y + 4
                << "' font-size='11'>" << s.label << "</text>\n";
            legend_y += 16;
        }
    }
    for (const Marker& m : markers) {
        out << "<circle cx='" << num(fr.px(m.x)) << "' cy='" << num(fr.py(m.y))
            << "' r='3.5' fill='" << m.color << "'/>\n";
        if (!m.label.empty())
            out << "<text x='" << num(fr.px(m.x) + 6) << "' y='" << num(fr.py(m.y) - 6)
                << "' font-size='11'>" << m.label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string heatmap(const std::vector<double>& t,
                    const std::vector<std::vector<double>>& rows,
                    const std::string& title, const std::string& xlabel,
                    const std::string& ylabel) {
    if (rows.empty() || rows[0].empty() || t.size() != rows.size())
        return header() + "</g>\n</svg>\n";
    const size_t nt = rows.size(), nx = rows[0].size();
    const size_t max_t = 400, max_x = 200;
    const size_t st = std::max<size_t>(1, nt / max_t), sx = std::max<size_t>(1, nx / max_x);

    double lo = rows[0][0], hi = rows[0][0];
    for (const auto& r : rows)
        for (double v : r) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!(lo < hi)) hi = lo + 1.0;

    Frame fr;
    fr.xr = {t.front(), t.back()};
    fr.yr = {0.0, 1.0};
    if (!(fr.xr.lo < fr.xr.hi)) fr.xr.hi = fr.xr.lo + 1.0;

    std::ostringstream out;
    out << header();
    // blue -> white -> red
    const auto color = [&](double v) {
        const double s = 2.0 * (v - lo) / (hi - lo) - 1.0;  // [-1, 1]
        int r = 255, g = 255, b = 255;
        if (s < 0.0) {
            r = static_cast<int>(255 * (1.0 + s));
            g = static_cast<int>(255 * (1.0 + s * 0.6));
        } else {
            b = static_cast<int>(255 * (1.0 - s));
            g = static_cast<int>(255 * (1.0 - s * 0.6));
        }
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
        return std::string(buf);
    };
    for (size_t i = 0; i < nt; i += st) {
        const size_t i2 = std::min(nt, i + st);
        const double x0 = fr.px(t[i]);
        const double x1 = fr.px(i2 < nt ? t[i2] : t.back()) + 0.5;
        for (size_t k = 0; k < nx; k += sx) {
            const size_t k2 = std::min(nx, k + sx);
            const double y0 = fr.py(static_cast<double>(k2) / nx);
            const double y1 = fr.py(static_cast<double>(k) / nx) + 0.5;
            out << "<rect x='" << num(x0) << "' y='" << num(y0) << "' width='"
                << num(std::max(0.1, x1 - x0)) << "' height='" << num(std::max(0.1, y1 - y0))
                << "' fill='" << color(rows[i][k]) << "'/>\n";
        }
    }
    axes(out, fr, title + "  [" + num(lo) + ", " + num(hi) + "]", xlabel, ylabel);
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace thb::svg
