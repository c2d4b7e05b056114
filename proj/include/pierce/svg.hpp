#pragma once

#include <array>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include "pierce/family.hpp"

namespace pierce {

namespace detail {

inline std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

inline double approx(const Rational& r) { return r.convert_to<double>(); }

} // namespace detail

// Draws the family clipped to [x0,x1] x [y0,y1], one polygon per region (so a
// shape count equals the region count even when a region misses the box),
// with light axes underneath. Output is byte-deterministic for equal inputs.
inline void render_svg(const Family& f, std::ostream& out, const Rational& x0, const Rational& y0,
                       const Rational& x1, const Rational& y1) {
    if (x0 >= x1 || y0 >= y1) throw Error(Errc::invalid_input, "degenerate clip box");
    static constexpr std::array<const char*, 8> kPalette = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    constexpr double kScale = 90.0;
    constexpr double kPad = 24.0;

    const double wx0 = detail::approx(x0), wy0 = detail::approx(y0);
    const double wx1 = detail::approx(x1), wy1 = detail::approx(y1);
    const double width = (wx1 - wx0) * kScale + 2 * kPad;
    const double height = (wy1 - wy0) * kScale + 2 * kPad;
    auto sx = [&](double x) { return kPad + (x - wx0) * kScale; };
    auto sy = [&](double y) { return kPad + (wy1 - y) * kScale; };
    auto px = [&](const Point& p) {
        return detail::fixed4(sx(detail::approx(p.x))) + "," + detail::fixed4(sy(detail::approx(p.y)));
    };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fixed4(width)
        << "\" height=\"" << detail::fixed4(height) << "\" viewBox=\"0 0 " << detail::fixed4(width)
        << " " << detail::fixed4(height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes, when they cross the box.
    if (x0 <= 0 && 0 <= x1)
        out << "  <line class=\"axis\" x1=\"" << detail::fixed4(sx(0)) << "\" y1=\""
            << detail::fixed4(sy(wy0)) << "\" x2=\"" << detail::fixed4(sx(0)) << "\" y2=\""
            << detail::fixed4(sy(wy1)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (y0 <= 0 && 0 <= y1)
        out << "  <line class=\"axis\" x1=\"" << detail::fixed4(sx(wx0)) << "\" y1=\""
            << detail::fixed4(sy(0)) << "\" x2=\"" << detail::fixed4(sx(wx1)) << "\" y2=\""
            << detail::fixed4(sy(0)) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

    const ConvexRegion box{"", {{1, 0, x1}, {-1, 0, -x0}, {0, 1, y1}, {0, -1, -y0}}};
    for (std::size_t i = 0; i < f.regions.size(); ++i) {
        const ConvexRegion clipped = intersect(f.regions[i], box);
        const char* color = kPalette[i % kPalette.size()];
        std::string pts;
        Point anchor{x0, y0};
        if (!is_empty(clipped)) {
            const std::vector<Point> vs = vertices(clipped); // bounded by the box
            for (std::size_t v = 0; v < vs.size(); ++v) pts += (v ? " " : "") + px(vs[v]);
            anchor = vs.front();
        }
        out << "  <polygon class=\"region\" points=\"" << pts << "\" fill=\"" << color
            << "\" fill-opacity=\"0.35\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        if (!pts.empty()) {
            const double ax = sx(detail::approx(anchor.x)) + 4.0;
            const double ay = sy(detail::approx(anchor.y)) - 4.0;
            out << "  <text class=\"label\" x=\"" << detail::fixed4(ax) << "\" y=\""
                << detail::fixed4(ay) << "\" font-size=\"12\" fill=\"" << color << "\">"
                << f.regions[i].label << "</text>\n";
        }
    }
    out << "</svg>\n";
}

inline std::string render_svg(const Family& f, const Rational& x0, const Rational& y0,
                              const Rational& x1, const Rational& y1) {
    std::ostringstream out;
    render_svg(f, out, x0, y0, x1, y1);
    return out.str();
}

} // namespace pierce
