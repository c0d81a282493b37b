#pragma once

// Flat ribbon model: a piecewise-linear core curve, the mirror crease at
// each fold, the strip (band of parallel rays) along each edge, the weaving
// admissibility condition, the largest admissible width, and L/W.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatknot/error.hpp"
#include "flatknot/geom.hpp"

namespace flatknot {

// Strip/crease contact is resolved much more finely than the degeneracy
// tolerance so that widths near the contact width can be told apart.
inline constexpr Real kRelContactTol = 1e-12;

enum class CutStyle {
    perpendicular,  // chord perpendicular to the end edge
    flush,          // along the mirror the ribbon would have if closed up
};

enum class LengthMode { closed, truncated };

struct Truncation {
    Real start_offset = 0.0;
    Real end_offset = 0.0;
    CutStyle cut = CutStyle::perpendicular;
};

// Transverse crossing of two non-adjacent core edges, i < j.
struct CrossingPoint {
    std::size_t i = 0;
    std::size_t j = 0;
    Point2 point;
    Real ti = 0.0;  // parameter along edge i
    Real tj = 0.0;
};

class CoreCurve {
public:
    CoreCurve(std::vector<Point2> vertices, bool closed, std::optional<Truncation> truncation = std::nullopt)
        : vertices_(std::move(vertices)), closed_(closed), truncation_(truncation) {
        validate();
    }

    const std::vector<Point2>& vertices() const noexcept { return vertices_; }
    bool closed() const noexcept { return closed_; }
    const std::optional<Truncation>& truncation() const noexcept { return truncation_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return closed_ ? vertices_.size() : vertices_.size() - 1; }
    LineSeg edge(std::size_t i) const noexcept {
        return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
    }
    bool is_fold(std::size_t k) const noexcept { return closed_ || (k > 0 && k + 1 < vertices_.size()); }
    bool adjacent(std::size_t i, std::size_t j) const noexcept {
        const std::size_t m = edge_count();
        if (i == j) return true;
        if (std::max(i, j) - std::min(i, j) == 1) return true;
        return closed_ && ((i == 0 && j == m - 1) || (j == 0 && i == m - 1));
    }

    Real scale() const noexcept { return bbox_diagonal(vertices_); }
    Real eps() const noexcept { return kRelEps * scale(); }

    const std::vector<CrossingPoint>& crossings() const noexcept { return crossings_; }

private:
    void validate();

    std::vector<Point2> vertices_;
    bool closed_ = false;
    std::optional<Truncation> truncation_;
    std::vector<CrossingPoint> crossings_;
};

inline void CoreCurve::validate() {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidCore, msg); };
    const std::size_t n = vertices_.size();
    if (n < 3) fail("a core needs at least 3 vertices");
    for (std::size_t k = 0; k < n; ++k) {
        if (!is_finite(vertices_[k])) fail("vertex " + std::to_string(k) + " is not finite");
    }
    if (closed_ && truncation_) fail("a closed core cannot carry a truncation");
    const Real eps = this->eps();
    if (!(eps > 0.0)) fail("all vertices coincide");

    const std::size_t m = edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        if (edge(i).length() <= eps) fail("edge " + std::to_string(i) + " has zero length");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!is_fold(k)) continue;
        // throws ZeroTurn for a straight vertex
        bisector_mirror(vertices_[(k + n - 1) % n], vertices_[k], vertices_[(k + 1) % n]);
    }

    for (std::size_t i = 0; i < m; ++i) {
        const LineSeg ei = edge(i);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == (i + 1) % n) continue;
            if (point_segment_distance(vertices_[k], ei) <= eps) {
                fail("edge " + std::to_string(i) + " passes through vertex " + std::to_string(k));
            }
        }
    }

    crossings_.clear();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (adjacent(i, j)) continue;
            std::optional<Point2> x;
            try {
                x = intersect_segments(edge(i), edge(j));
            } catch (const Error&) {
                fail("edges " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
            }
            if (!x) continue;
            const LineSeg ei = edge(i), ej = edge(j);
            const Real ti = dot(*x - ei.a, ei.direction()) / dot(ei.direction(), ei.direction());
            const Real tj = dot(*x - ej.a, ej.direction()) / dot(ej.direction(), ej.direction());
            crossings_.push_back({i, j, *x, ti, tj});
        }
    }
    for (std::size_t a = 0; a < crossings_.size(); ++a) {
        for (std::size_t b = a + 1; b < crossings_.size(); ++b) {
            if (distance(crossings_[a].point, crossings_[b].point) <= eps) {
                fail("more than two edges meet at one crossing point");
            }
        }
    }

    if (truncation_) {
        const Truncation& t = *truncation_;
        if (!(t.start_offset >= 0.0) || !(t.end_offset >= 0.0)) fail("truncation offsets must be non-negative");
        if (t.start_offset >= edge(0).length() - eps) fail("start truncation offset exceeds the first edge");
        if (t.end_offset >= edge(m - 1).length() - eps) fail("end truncation offset exceeds the last edge");
    }
}

// ---------------------------------------------------------------------------
// Weaving

struct Crossing {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t over = 0;  // edge index passing over; equals i or j
};

struct Weaving {
    std::vector<Crossing> crossings;
};

inline std::string describe(const Crossing& c) {
    return "(" + std::to_string(c.i) + ", " + std::to_string(c.j) + ", over " + std::to_string(c.over) + ")";
}

// Throws ValidationError naming the first offending entry.
inline void validate_weaving(const CoreCurve& core, const Weaving& weaving) {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); };
    const auto& geo = core.crossings();
    std::vector<bool> seen(geo.size(), false);
    for (std::size_t e = 0; e < weaving.crossings.size(); ++e) {
        const Crossing& c = weaving.crossings[e];
        const std::string where = "crossings[" + std::to_string(e) + "] " + describe(c);
        if (c.i >= core.edge_count() || c.j >= core.edge_count()) fail(where + ": edge index out of range");
        if (c.i == c.j) fail(where + ": an edge cannot cross itself");
        if (c.over != c.i && c.over != c.j) fail(where + ": over must name one of the two edges");
        const std::size_t lo = std::min(c.i, c.j), hi = std::max(c.i, c.j);
        const auto it = std::find_if(geo.begin(), geo.end(), [&](const CrossingPoint& g) { return g.i == lo && g.j == hi; });
        if (it == geo.end()) fail(where + ": edges " + std::to_string(lo) + " and " + std::to_string(hi) + " do not intersect");
        const auto idx = static_cast<std::size_t>(it - geo.begin());
        if (seen[idx]) fail(where + ": duplicate entry for this crossing");
        seen[idx] = true;
    }
    for (std::size_t g = 0; g < geo.size(); ++g) {
        if (!seen[g]) {
            fail("missing crossing entry for edges " + std::to_string(geo[g].i) + " and " + std::to_string(geo[g].j));
        }
    }
}

// One pass of the core through a crossing.
struct Passage {
    std::size_t edge = 0;
    Real t = 0.0;
    std::size_t crossing = 0;  // index into Weaving::crossings
    bool over = false;
};

// Passages in core order (edge, then parameter along the edge).
inline std::vector<Passage> passages(const CoreCurve& core, const Weaving& weaving) {
    std::vector<Passage> out;
    const auto& geo = core.crossings();
    for (std::size_t c = 0; c < weaving.crossings.size(); ++c) {
        const Crossing& x = weaving.crossings[c];
        const std::size_t lo = std::min(x.i, x.j), hi = std::max(x.i, x.j);
        for (const auto& g : geo) {
            if (g.i == lo && g.j == hi) {
                out.push_back({lo, g.ti, c, x.over == lo});
                out.push_back({hi, g.tj, c, x.over == hi});
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Passage& a, const Passage& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.t < b.t;
    });
    return out;
}

// Over/under alternating along the core, starting with "over". Throws
// ValidationError if the diagram is not alternating-compatible.
inline Weaving alternating_weaving(const CoreCurve& core) {
    Weaving w;
    for (const auto& g : core.crossings()) w.crossings.push_back({g.i, g.j, g.i});
    const auto seq = passages(core, w);
    std::vector<int> state(w.crossings.size(), -1);  // -1 unset, else index of over edge
    for (std::size_t p = 0; p < seq.size(); ++p) {
        const bool over = (p % 2 == 0);
        Crossing& c = w.crossings[seq[p].crossing];
        const std::size_t other = seq[p].edge == c.i ? c.j : c.i;
        const std::size_t want = over ? seq[p].edge : other;
        if (state[seq[p].crossing] >= 0 && static_cast<std::size_t>(state[seq[p].crossing]) != want) {
            throw Error(ErrorCode::ValidationError, "diagram does not admit an alternating weaving");
        }
        state[seq[p].crossing] = static_cast<int>(want);
        c.over = want;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Chords: creases at folds and cuts at truncated ends. Geometry that does
// not depend on the width is kept here; a chord at width W is the segment
// center +- W * half_per_width * direction.

enum class ChordKind { crease, cut };

struct Chord {
    ChordKind kind = ChordKind::crease;
    std::size_t vertex = 0;
    DirLine line;               // through the chord center
    Real half_per_width = 0;  // 1 / (2 sin alpha)

    LineSeg at_width(Real w) const noexcept {
        const Real h = w * half_per_width;
        return {line.at(-h), line.at(h)};
    }
};

struct StripFrame {
    std::size_t edge = 0;
    Point2 start;   // where the strip's center line begins (after truncation)
    Point2 end;
    Point2 dir;     // unit, start -> end
    Point2 normal;  // left normal
    std::size_t start_chord = 0;
    std::size_t end_chord = 0;
};

// Width-independent geometry of a ribbon over a core.
struct RibbonFrame {
    std::vector<Chord> chords;  // indexed by vertex
    std::vector<StripFrame> strips;
    Real scale = 0.0;
};

inline Chord make_chord(ChordKind kind, std::size_t vertex, Point2 center, Point2 mirror_dir, Point2 edge_dir) {
    const DirLine line = DirLine::through(center, mirror_dir);
    const Real sin_a = std::abs(cross(normalized(edge_dir), line.direction));
    return {kind, vertex, line, 0.5 / sin_a};
}

inline RibbonFrame ribbon_frame(const CoreCurve& core) {
    const auto& v = core.vertices();
    const std::size_t n = v.size();
    const std::size_t m = core.edge_count();
    RibbonFrame f;
    f.scale = core.scale();
    f.chords.resize(n);

    for (std::size_t k = 0; k < n; ++k) {
        if (!core.is_fold(k)) continue;
        const Point2 prev = v[(k + n - 1) % n], next = v[(k + 1) % n];
        f.chords[k] = make_chord(ChordKind::crease, k, v[k], bisector_mirror(prev, v[k], next).direction, next - v[k]);
    }

    Point2 start = v[0];
    Point2 end = v[n - 1];
    if (!core.closed()) {
        const Truncation t = core.truncation().value_or(Truncation{});
        const Point2 d0 = normalized(v[1] - v[0]);
        const Point2 d1 = normalized(v[n - 1] - v[n - 2]);
        start = v[0] + t.start_offset * d0;
        end = v[n - 1] - t.end_offset * d1;
        Point2 m0 = perp(d0), m1 = perp(d1);
        if (t.cut == CutStyle::flush) {
            m0 = bisector_mirror(v[n - 1], v[0], v[1]).direction;
            m1 = bisector_mirror(v[n - 2], v[n - 1], v[0]).direction;
        }
        f.chords[0] = make_chord(ChordKind::cut, 0, start, m0, d0);
        f.chords[n - 1] = make_chord(ChordKind::cut, n - 1, end, m1, d1);
    }

    for (std::size_t i = 0; i < m; ++i) {
        StripFrame s;
        s.edge = i;
        s.start = (!core.closed() && i == 0) ? start : v[i];
        s.end = (!core.closed() && i + 1 == m) ? end : v[(i + 1) % n];
        s.dir = normalized(v[(i + 1) % n] - v[i]);
        s.normal = perp(s.dir);
        s.start_chord = i;
        s.end_chord = (i + 1) % n;
        f.strips.push_back(s);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Contact tests. A strip is the band |n.(p - start)| <= W/2 cut by its two
// chord lines; "overlap" means penetration deeper than the contact tolerance.

namespace detail {

// Inward unit normal of a chord line as seen from the strip that starts
// (sign = +1) or ends (sign = -1) on it.
inline Point2 chord_inward(const Chord& c, const StripFrame& s, Real sign) {
    Point2 nrm = perp(c.line.direction);
    if (dot(nrm, s.dir) * sign < 0.0) nrm = -nrm;
    return nrm;
}

// Linear constraint A*tau + B*W + C >= 0 over the chord parameter tau and W.
struct Lin {
    Real a, b, c;
    bool inset = true;  // subject to the contact tolerance
};

inline std::vector<Lin> overlap_constraints(const RibbonFrame& f, const StripFrame& s, const Chord& c) {
    const Chord& cs = f.chords[s.start_chord];
    const Chord& ce = f.chords[s.end_chord];
    const Point2 ns = chord_inward(cs, s, 1.0);
    const Point2 ne = chord_inward(ce, s, -1.0);
    const Point2 m = c.line.direction;
    const Point2 o = c.line.origin;
    const Real off = dot(s.normal, o - s.start);
    const Real nm = dot(s.normal, m);
    return {
        {-nm, 0.5, -off},                               // band, left side
        {nm, 0.5, off},                                 // band, right side
        {dot(ns, m), 0.0, dot(ns, o - cs.line.origin)},  // past the start chord
        {dot(ne, m), 0.0, dot(ne, o - ce.line.origin)},  // before the end chord
        {-1.0, c.half_per_width, 0.0, false},           // tau <= W h
        {1.0, c.half_per_width, 0.0, false},            // tau >= -W h
        {0.0, 1.0, 0.0, false},                         // W >= 0
    };
}

}  // namespace detail

// True when the chords bounding strip s cross strictly inside the band.
inline bool strip_collapsed(const RibbonFrame& f, const StripFrame& s, Real w, Real tol) {
    const Chord& a = f.chords[s.start_chord];
    const Chord& b = f.chords[s.end_chord];
    const Real den = cross(a.line.direction, b.line.direction);
    if (std::abs(den) <= 1e-14) return false;
    const Point2 d = b.line.origin - a.line.origin;
    const Real ta = cross(d, b.line.direction) / den;
    const Real tb = cross(d, a.line.direction) / den;
    return std::abs(ta) < w * a.half_per_width - tol && std::abs(tb) < w * b.half_per_width - tol;
}

// Width at which strip s collapses (its chords meet on the band edge).
inline Real collapse_width(const RibbonFrame& f, const StripFrame& s) {
    const Chord& a = f.chords[s.start_chord];
    const Chord& b = f.chords[s.end_chord];
    const Real den = cross(a.line.direction, b.line.direction);
    if (std::abs(den) <= 1e-14) return std::numeric_limits<Real>::infinity();
    const Real ta = cross(b.line.origin - a.line.origin, b.line.direction) / den;
    const Point2 x = a.line.at(ta);
    return 2.0 * std::abs(dot(s.normal, x - s.start));
}

// True when chord c at width w reaches deeper than tol into strip s.
inline bool chord_overlaps_strip(const RibbonFrame& f, const StripFrame& s, const Chord& c, Real w, Real tol) {
    Real lo = -std::numeric_limits<Real>::infinity();
    Real hi = std::numeric_limits<Real>::infinity();
    for (const auto& k : detail::overlap_constraints(f, s, c)) {
        // a*tau + b*w + c > tol (or > 0 for the chord's own extent)
        const Real rhs = (k.inset ? tol : 0.0) - (k.b * w + k.c);
        if (k.a > 0.0) {
            lo = std::max(lo, rhs / k.a);
        } else if (k.a < 0.0) {
            hi = std::min(hi, rhs / k.a);
        } else if (rhs >= 0.0) {
            return false;
        }
    }
    return lo < hi;
}

// Smallest width at which chord c touches the interior of strip s, solved
// exactly as a two-variable linear program over (tau, W).
inline Real overlap_width(const RibbonFrame& f, const StripFrame& s, const Chord& c) {
    const auto cons = detail::overlap_constraints(f, s, c);
    const Real slack = 1e-12 * std::max(Real{1}, f.scale);
    Real best = std::numeric_limits<Real>::infinity();
    for (std::size_t p = 0; p < cons.size(); ++p) {
        for (std::size_t q = p + 1; q < cons.size(); ++q) {
            const auto& u = cons[p];
            const auto& v = cons[q];
            const Real det = u.a * v.b - u.b * v.a;
            if (std::abs(det) <= 1e-15) continue;
            const Real tau = (-u.c * v.b + v.c * u.b) / det;
            const Real w = (-u.a * v.c + v.a * u.c) / det;
            bool ok = true;
            for (const auto& k : cons) {
                if (k.a * tau + k.b * w + k.c < -slack) { ok = false; break; }
            }
            if (ok) best = std::min(best, w);
        }
    }
    return best;
}

// One width-limiting contact: a strip collapsing onto itself, or a strip
// meeting a fold line of an edge it crosses.
struct Contact {
    std::size_t strip = 0;
    std::optional<std::size_t> chord;  // empty for collapse
};

inline std::vector<Contact> contacts(const CoreCurve& core, const RibbonFrame& f, const Weaving& weaving) {
    std::vector<Contact> out;
    for (std::size_t i = 0; i < f.strips.size(); ++i) out.push_back({i, std::nullopt});
    auto add = [&](std::size_t strip, std::size_t other_edge) {
        for (std::size_t vtx : {f.strips[other_edge].start_chord, f.strips[other_edge].end_chord}) {
            out.push_back({strip, vtx});
        }
    };
    for (const auto& c : weaving.crossings) {
        if (c.i >= core.edge_count() || c.j >= core.edge_count()) {
            throw Error(ErrorCode::ValidationError, "weaving references a missing edge");
        }
        add(c.i, c.j);
        add(c.j, c.i);
    }
    return out;
}

inline bool violated(const RibbonFrame& f, const Contact& k, Real w, Real tol) {
    const StripFrame& s = f.strips[k.strip];
    if (!k.chord) return strip_collapsed(f, s, w, tol);
    return chord_overlaps_strip(f, s, f.chords[*k.chord], w, tol);
}

inline Real contact_width(const RibbonFrame& f, const Contact& k) {
    const StripFrame& s = f.strips[k.strip];
    if (!k.chord) return collapse_width(f, s);
    return overlap_width(f, s, f.chords[*k.chord]);
}

// ---------------------------------------------------------------------------
// Layout at a given width

struct Crease {
    std::size_t vertex_index = 0;
    DirLine mirror;
    LineSeg segment;
};

struct Strip {
    std::size_t edge = 0;
    // start-right, end-right, end-left, start-left (left/right of travel)
    std::array<Point2, 4> corners;
};

struct RibbonLayout {
    Real width = 0.0;
    std::vector<Strip> strips;
    std::vector<Crease> creases;
    std::optional<LineSeg> start_cut;
    std::optional<LineSeg> end_cut;
};

inline std::vector<Crease> creases(const CoreCurve& core, Real width) {
    if (!(width > 0.0)) throw Error(ErrorCode::InvalidCore, "width must be positive");
    const RibbonFrame f = ribbon_frame(core);
    std::vector<Crease> out;
    for (const auto& c : f.chords) {
        if (c.kind != ChordKind::crease || !core.is_fold(c.vertex)) continue;
        out.push_back({c.vertex, c.line, c.at_width(width)});
    }
    return out;
}

inline RibbonLayout layout(const CoreCurve& core, Real width) {
    if (!(width > 0.0)) throw Error(ErrorCode::InvalidCore, "width must be positive");
    const RibbonFrame f = ribbon_frame(core);
    const Real tol = kRelContactTol * f.scale;
    RibbonLayout out;
    out.width = width;
    for (const auto& s : f.strips) {
        auto ends = [&](const Chord& c) {
            const LineSeg seg = c.at_width(width);
            return cross(s.dir, seg.b - seg.a) > 0.0 ? std::pair{seg.a, seg.b} : std::pair{seg.b, seg.a};
        };
        const auto [sr, sl] = ends(f.chords[s.start_chord]);
        const auto [er, el] = ends(f.chords[s.end_chord]);
        out.strips.push_back({s.edge, {sr, er, el, sl}});
    }
    for (const auto& c : f.chords) {
        if (c.kind == ChordKind::crease && core.is_fold(c.vertex)) out.creases.push_back({c.vertex, c.line, c.at_width(width)});
    }
    if (!core.closed()) {
        const std::size_t n = core.vertex_count();
        out.start_cut = f.chords[0].at_width(width);
        out.end_cut = f.chords[n - 1].at_width(width);
        if (strip_collapsed(f, f.strips.front(), width, tol) || strip_collapsed(f, f.strips.back(), width, tol)) {
            throw Error(ErrorCode::InvalidTruncation, "truncation cut intersects a crease at this width");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Admissibility and maximal width

inline bool admissible(const CoreCurve& core, const Weaving& weaving, Real width) {
    if (!(width > 0.0)) return false;
    const RibbonFrame f = ribbon_frame(core);
    const Real tol = kRelContactTol * f.scale;
    for (const auto& k : contacts(core, f, weaving)) {
        if (violated(f, k, width, tol)) return false;
    }
    return true;
}

struct WidthSearch {
    Real width = 0.0;
    Real lower = 0.0;  // last admissible bisection probe
    Real upper = 0.0;  // first inadmissible bisection probe
    int iterations = 0;
    bool polished = false;
};

inline constexpr Real kWidthRelTol = 1e-10;
inline constexpr int kWidthMaxIter = 200;

inline WidthSearch max_width_search(const CoreCurve& core, const Weaving& weaving) {
    const RibbonFrame f = ribbon_frame(core);
    const Real tol = kRelContactTol * f.scale;
    const auto all = contacts(core, f, weaving);
    auto ok = [&](Real w) {
        return std::none_of(all.begin(), all.end(), [&](const Contact& k) { return violated(f, k, w, tol); });
    };

    WidthSearch r;
    Real lo = 1e-6 * f.scale;
    if (!ok(lo)) throw Error(ErrorCode::NoPositiveWidth, "core is inadmissible even at the lower width probe");
    Real hi = 2.0 * lo;
    while (ok(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6 * f.scale) throw Error(ErrorCode::UnboundedWidth, "no width-limiting contact found");
    }
    int it = 0;
    while ((hi - lo) > kWidthRelTol * lo && it < kWidthMaxIter) {
        const Real mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
        ++it;
    }
    r.lower = lo;
    r.upper = hi;
    r.iterations = it;
    r.width = lo;

    // exact contact width of whichever constraints fail at the upper probe
    Real exact = std::numeric_limits<Real>::infinity();
    for (const auto& k : all) {
        if (violated(f, k, hi, tol)) exact = std::min(exact, contact_width(f, k));
    }
    const Real slack = 4.0 * kWidthRelTol * lo;
    if (std::isfinite(exact) && exact >= lo - slack && exact <= hi + slack) {
        r.width = exact;
        r.polished = true;
    }
    return r;
}

inline Real max_width(const CoreCurve& core, const Weaving& weaving) {
    return max_width_search(core, weaving).width;
}

// ---------------------------------------------------------------------------
// Length and ratio

struct RibbonMeasure {
    Real length = 0.0;
    Real width = 0.0;
    Real ratio = 0.0;
};

inline LengthMode default_mode(const CoreCurve& core) noexcept {
    return core.closed() ? LengthMode::closed : LengthMode::truncated;
}

inline Real core_length(const CoreCurve& core, LengthMode mode) {
    if (mode == LengthMode::closed && !core.closed()) {
        throw Error(ErrorCode::ModeMismatch, "closed length requested for an open core");
    }
    if (mode == LengthMode::truncated && !core.truncation()) {
        throw Error(ErrorCode::ModeMismatch, "truncated length requires a truncation spec");
    }
    Real total = 0.0;
    for (std::size_t i = 0; i < core.edge_count(); ++i) total += core.edge(i).length();
    if (mode == LengthMode::truncated) {
        total -= core.truncation()->start_offset + core.truncation()->end_offset;
    }
    return total;
}

inline RibbonMeasure ratio(const CoreCurve& core, const Weaving& weaving, LengthMode mode) {
    RibbonMeasure m;
    m.length = core_length(core, mode);
    m.width = max_width(core, weaving);
    m.ratio = m.length / m.width;
    return m;
}

}  // namespace flatknot
