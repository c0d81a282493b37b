#pragma once

// SVG 1.1 output for ribbon layouts and developed strips. Model coordinates
// are y-up; every emitted point goes through one flip to screen y-down.

#include <algorithm>
#include <cstdio>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "flatknot/ribbon.hpp"
#include "flatknot/unfold.hpp"

namespace flatknot {

struct SvgStyle {
    std::string paper = "#e8d9a8";
    std::string ink = "#3a3226";
    std::string crease = "#b0413e";
    std::string cut = "#2f5d8a";
    Real margin = 0.05;        // fraction of the larger extent
    Real stroke = 0.004;       // fraction of the bounding-box diagonal
    int pixels = 800;          // rendered width
};

namespace detail {

inline std::string num(Real v, int digits = 12) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, v == 0.0 ? Real{0} : v);
    return buf;
}

inline Point2 screen(Point2 p) { return {p.x, -p.y}; }

inline std::string points_attr(std::span<const Point2> pts) {
    std::string s;
    for (const auto& p : pts) {
        const Point2 q = screen(p);
        if (!s.empty()) s += ' ';
        s += num(q.x) + "," + num(q.y);
    }
    return s;
}

inline std::string line_elem(const char* cls, LineSeg seg, const std::string& color, Real width,
                             const std::string& extra = {}) {
    const Point2 a = screen(seg.a), b = screen(seg.b);
    return "<line class=\"" + std::string(cls) + "\" x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
           "\" y2=\"" + num(b.y) + "\" stroke=\"" + color + "\" stroke-width=\"" + num(width) + "\"" + extra + "/>\n";
}

// Opening tag with a viewBox around the points plus the margin.
inline std::string svg_open(std::span<const Point2> pts, const SvgStyle& st, Real& stroke_out) {
    Real x0 = std::numeric_limits<Real>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
    for (const auto& p : pts) {
        const Point2 q = screen(p);
        x0 = std::min(x0, q.x); x1 = std::max(x1, q.x);
        y0 = std::min(y0, q.y); y1 = std::max(y1, q.y);
    }
    if (pts.empty()) x0 = y0 = 0.0, x1 = y1 = 1.0;
    const Real pad = st.margin * std::max({x1 - x0, y1 - y0, Real{1e-12}});
    x0 -= pad; y0 -= pad; x1 += pad; y1 += pad;
    stroke_out = st.stroke * std::hypot(x1 - x0, y1 - y0);
    const Real w = x1 - x0, h = y1 - y0;
    const Real px_h = st.pixels * h / w;
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(st.pixels) +
           "\" height=\"" + num(std::round(px_h)) + "\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) + " " +
           num(h) + "\">\n";
}

}  // namespace detail

// Strips in edge order, then at each crossing the over strip again, clipped
// to the under strip, so the under strand shows as broken. Creases and end
// cuts are stroked on top.
inline std::string render_svg(const RibbonLayout& lay, const Weaving& weaving, const SvgStyle& st = {}) {
    using detail::num;
    std::vector<Point2> all;
    for (const auto& s : lay.strips) all.insert(all.end(), s.corners.begin(), s.corners.end());
    Real sw = 0.0;
    std::string out = detail::svg_open(all, st, sw);

    auto strip_of = [&](std::size_t edge) -> const Strip* {
        for (const auto& s : lay.strips) {
            if (s.edge == edge) return &s;
        }
        return nullptr;
    };
    auto polygon = [&](const Strip& s) {
        return "<polygon class=\"strip\" data-edge=\"" + std::to_string(s.edge) + "\" points=\"" +
               detail::points_attr(s.corners) + "\" fill=\"" + st.paper + "\" stroke=\"" + st.ink +
               "\" stroke-width=\"" + num(sw) + "\" stroke-linejoin=\"round\"/>\n";
    };

    std::string defs, over;
    for (std::size_t k = 0; k < weaving.crossings.size(); ++k) {
        const Crossing& c = weaving.crossings[k];
        const Strip* top = strip_of(c.over);
        const Strip* under = strip_of(c.over == c.i ? c.j : c.i);
        if (!top || !under) continue;
        const std::string id = "under-" + std::to_string(k);
        defs += "<clipPath id=\"" + id + "\"><polygon points=\"" + detail::points_attr(under->corners) +
                "\"/></clipPath>\n";
        over += "<polygon class=\"over\" data-edge=\"" + std::to_string(top->edge) + "\" points=\"" +
                detail::points_attr(top->corners) + "\" fill=\"" + st.paper + "\" stroke=\"" + st.ink +
                "\" stroke-width=\"" + num(sw) + "\" clip-path=\"url(#" + id + ")\"/>\n";
    }
    if (!defs.empty()) out += "<defs>\n" + defs + "</defs>\n";

    out += "<g id=\"strips\">\n";
    for (const auto& s : lay.strips) out += polygon(s);
    out += "</g>\n<g id=\"crossings\">\n" + over + "</g>\n<g id=\"creases\">\n";
    for (const auto& c : lay.creases) out += detail::line_elem("crease", c.segment, st.crease, sw);
    for (const auto& cut : {lay.start_cut, lay.end_cut}) {
        if (cut) out += detail::line_elem("cut", *cut, st.cut, sw);
    }
    out += "</g>\n</svg>\n";
    return out;
}

// The developed strip as a band from the start cut to the end cut, folds as
// stroked lines (dashed when the fold sense is negative) and each segment
// labeled with its length along the center line.
inline std::string render_svg(const UnfoldedStrip& strip, const SvgStyle& st = {}) {
    using detail::num;
    const Real h = strip.width / 2.0;
    auto across = [&](Real x, Point2 dir) {
        const Real shift = h * dir.x / dir.y;  // dir.y > 0 for any chord transverse to the strip
        return LineSeg{{x - shift, -h}, {x + shift, h}};
    };
    const LineSeg start = across(0.0, strip.start_cut_dir);
    const LineSeg end = across(strip.total_length, strip.end_cut_dir);
    const std::vector<Point2> band{start.a, end.a, end.b, start.b};

    Real sw = 0.0;
    std::string out = detail::svg_open(band, st, sw);
    out += "<polygon class=\"band\" points=\"" + detail::points_attr(band) + "\" fill=\"" + st.paper + "\" stroke=\"" +
           st.ink + "\" stroke-width=\"" + num(sw) + "\"/>\n";
    out += detail::line_elem("cut", start, st.cut, sw);
    out += detail::line_elem("cut", end, st.cut, sw);
    for (const auto& fm : strip.fold_marks) {
        const std::string dash = fm.fold_angle < 0.0 ? " stroke-dasharray=\"" + num(4 * sw) + " " + num(3 * sw) + "\"" : "";
        out += detail::line_elem(fm.fold_angle < 0.0 ? "fold mountain" : "fold valley", across(fm.position, fm.crease_dir),
                                 st.crease, sw, dash);
    }
    Real x = 0.0;
    for (Real len : strip.segment_lengths) {
        const Point2 at = detail::screen({x + len / 2.0, 0.0});
        out += "<text class=\"length\" x=\"" + num(at.x) + "\" y=\"" + num(at.y) + "\" font-size=\"" +
               num(0.25 * strip.width) + "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"" + st.ink +
               "\">" + num(len, 6) + "</text>\n";
        x += len;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace flatknot
