#pragma once

// Isometric development of a truncated ribbon into a straight strip, and the
// inverse refolding. The developed frame puts the start of the center line
// at the origin with the first edge along +x.

#include <cmath>
#include <cstddef>
#include <vector>

#include "flatknot/ribbon.hpp"

namespace flatknot {

struct FoldMark {
    Real position = 0.0;  // arclength along the center line
    // |turning angle| with sign: + when the outgoing segment lies over the
    // incoming one at the crease (valley as seen with over-strands on top)
    Real fold_angle = 0.0;
    Point2 crease_dir;    // unit crease direction in the developed frame, y >= 0
};

struct UnfoldedStrip {
    Real width = 0.0;
    Real total_length = 0.0;
    std::vector<FoldMark> fold_marks;
    std::vector<Real> segment_lengths;
    Point2 start_cut_dir;  // developed directions of the end chords, y >= 0
    Point2 end_cut_dir;
};

namespace detail {

// Orthogonal 2x2 map (columns c0, c1) plus translation.
struct Isometry {
    Point2 c0{1.0, 0.0};
    Point2 c1{0.0, 1.0};
    Point2 t;

    Point2 linear(Point2 v) const noexcept { return v.x * c0 + v.y * c1; }
    Point2 operator()(Point2 p) const noexcept { return linear(p) + t; }
};

inline Point2 upper(Point2 d) noexcept {
    return (d.y < 0.0 || (d.y == 0.0 && d.x < 0.0)) ? -d : d;
}

// + when the outgoing edge should sit on top at fold k: follow the next
// passage along the core, or the inverse of the previous one.
inline int fold_sense(const std::vector<Passage>& seq, std::size_t fold_vertex) {
    for (const auto& p : seq) {
        if (p.edge >= fold_vertex) return p.over ? 1 : -1;
    }
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        if (it->edge < fold_vertex) return it->over ? -1 : 1;
    }
    return 1;
}

}  // namespace detail

inline UnfoldedStrip unfold(const CoreCurve& core, const Weaving& weaving, Real width) {
    if (core.closed()) throw Error(ErrorCode::ModeMismatch, "only open cores can be unfolded");
    if (!core.truncation()) throw Error(ErrorCode::ModeMismatch, "unfolding requires a truncation spec");

    const RibbonFrame f = ribbon_frame(core);
    const auto& v = core.vertices();
    const std::size_t n = v.size();
    const auto seq = passages(core, weaving);

    UnfoldedStrip out;
    out.width = width;

    const Point2 d0 = f.strips.front().dir;
    // rotation taking d0 to +x, start point to the origin
    detail::Isometry map;
    map.c0 = {d0.x, -d0.y};
    map.c1 = {d0.y, d0.x};
    map.t = -map.linear(f.strips.front().start);
    out.start_cut_dir = detail::upper(map.linear(f.chords[0].line.direction));

    Real pos = 0.0;
    for (std::size_t i = 0; i + 1 < f.strips.size(); ++i) {
        const StripFrame& s = f.strips[i];
        const Real len = distance(s.start, s.end);
        out.segment_lengths.push_back(len);
        pos += len;

        const std::size_t k = i + 1;
        const Chord& crease = f.chords[k];
        const Point2 d_in = s.dir;
        const Point2 d_out = f.strips[k].dir;
        const Real turn = std::atan2(std::abs(cross(d_in, d_out)), dot(d_in, d_out));
        out.fold_marks.push_back({pos, detail::fold_sense(seq, k) * turn, detail::upper(map.linear(crease.line.direction))});

        // compose with the reflection across this crease
        const DirLine& m = crease.line;
        detail::Isometry next;
        next.c0 = map.linear(reflect_vector({1.0, 0.0}, m.direction));
        next.c1 = map.linear(reflect_vector({0.0, 1.0}, m.direction));
        next.t = map(reflect_across({0.0, 0.0}, m));
        map = next;
    }
    const StripFrame& last = f.strips.back();
    out.segment_lengths.push_back(distance(last.start, last.end));
    pos += out.segment_lengths.back();
    out.total_length = pos;
    out.end_cut_dir = detail::upper(map.linear(f.chords[n - 1].line.direction));
    return out;
}

// Without a weaving every fold gets the + sense.
inline UnfoldedStrip unfold(const CoreCurve& core, Real width) {
    return unfold(core, Weaving{}, width);
}

// Refold the developed strip by reflecting everything past each crease
// across it, last crease first. Returns the truncated core's vertices in the
// developed frame.
inline std::vector<Point2> refold(const UnfoldedStrip& strip) {
    std::vector<Point2> pts{{0.0, 0.0}};
    Real x = 0.0;
    for (Real len : strip.segment_lengths) {
        x += len;
        pts.push_back({x, 0.0});
    }
    for (std::size_t k = strip.fold_marks.size(); k-- > 0;) {
        const FoldMark& fm = strip.fold_marks[k];
        const DirLine crease{{fm.position, 0.0}, fm.crease_dir};
        for (std::size_t p = k + 2; p < pts.size(); ++p) pts[p] = reflect_across(pts[p], crease);
    }
    return pts;
}

// Vertices of the core after truncation (first and last moved inward).
inline std::vector<Point2> truncated_vertices(const CoreCurve& core) {
    std::vector<Point2> pts = core.vertices();
    if (!core.closed()) {
        const Truncation t = core.truncation().value_or(Truncation{});
        const std::size_t n = pts.size();
        pts[0] = pts[0] + t.start_offset * normalized(pts[1] - pts[0]);
        pts[n - 1] = pts[n - 1] - t.end_offset * normalized(pts[n - 1] - pts[n - 2]);
    }
    return pts;
}

}  // namespace flatknot
