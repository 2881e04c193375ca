#include "fenceopt/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fenceopt/bounds.hpp"
#include "fenceopt/fence_geometry.hpp"

namespace fenceopt {

std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

void write_curve_csv(std::ostream& out, const Rect& rect, int samples) {
    if (samples < 2) throw DomainError("curve needs at least 2 samples");
    const double xy = rect.area();
    const double threshold = rect.x() * rect.x() / M_PI;

    std::vector<double> areas;
    areas.reserve(static_cast<std::size_t>(samples) + 2);
    for (int i = 0; i < samples; ++i)
        areas.push_back(i == samples - 1 ? xy : xy * i / (samples - 1));
    areas.push_back(threshold);
    areas.push_back(xy - threshold);
    std::sort(areas.begin(), areas.end());
    areas.erase(std::unique(areas.begin(), areas.end()), areas.end());

    out << "area,lstar,regime\n";
    for (double a : areas)
        out << fmt_double(a) << ',' << fmt_double(l_star(rect, a)) << ','
            << to_string(regime(rect, a)) << '\n';
}

void write_fence_svg(std::ostream& out, const Rect& rect, double a) {
    const double x = rect.x();
    const double y = rect.y();
    const FenceGeometry fence = optimal_fence(rect, a);
    const double lstar = l_star(rect, a);
    const double stroke = 0.01 * x;

    // Screen frame: long side horizontal, origin corner at the top left.
    // Geometry (gx, gy) maps to screen (gy, gx).
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt_double(y)
        << ' ' << fmt_double(x) << "\" width=\"720\" height=\""
        << fmt_double(720.0 * x / y) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << fmt_double(y) << "\" height=\""
        << fmt_double(x) << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\""
        << fmt_double(stroke) << "\"/>\n";

    if (const auto* cut = std::get_if<StraightCut>(&fence)) {
        out << "  <path d=\"M " << fmt_double(cut->offset) << " 0 L "
            << fmt_double(cut->offset) << ' ' << fmt_double(x)
            << "\" fill=\"none\" stroke=\"#c1121f\" stroke-width=\"" << fmt_double(stroke)
            << "\"/>\n";
    } else if (const auto* arc = std::get_if<QuarterArc>(&fence)) {
        const std::string r = fmt_double(arc->radius);
        out << "  <path d=\"M 0 " << r << " A " << r << ' ' << r << " 0 0 0 " << r
            << " 0\" fill=\"none\" stroke=\"#c1121f\" stroke-width=\"" << fmt_double(stroke)
            << "\"/>\n";
    }

    out << "  <text x=\"" << fmt_double(0.04 * y) << "\" y=\"" << fmt_double(0.10 * x)
        << "\" font-size=\"" << fmt_double(0.07 * x)
        << "\" font-family=\"monospace\" fill=\"#222222\">l* = " << fmt_sig(lstar, 6)
        << "</text>\n";
    out << "</svg>\n";
}

} // namespace fenceopt
