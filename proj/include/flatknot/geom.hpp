#pragma once

// Planar primitives for the fold model: points, directed lines, segments,
// reflections, fold mirrors and segment intersection.
//
// Degeneracy predicates use a scale-relative tolerance
// eps = kRelEps * (bounding-box diagonal of the inputs).

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <span>

#include "flatknot/error.hpp"

namespace flatknot {

// Scalar used throughout. Extended precision keeps the printed 15-digit
// ratios exact even though core files store IEEE doubles.
using Real = long double;

inline constexpr Real kRelEps = 1e-9;

struct Point2 {
    Real x = 0.0;
    Real y = 0.0;

    constexpr Point2& operator+=(Point2 o) noexcept { x += o.x; y += o.y; return *this; }
    constexpr Point2& operator-=(Point2 o) noexcept { x -= o.x; y -= o.y; return *this; }
    constexpr Point2& operator*=(Real s) noexcept { x *= s; y *= s; return *this; }

    friend constexpr Point2 operator+(Point2 a, Point2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator-(Point2 a) noexcept { return {-a.x, -a.y}; }
    friend constexpr Point2 operator*(Real s, Point2 a) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr Point2 operator*(Point2 a, Real s) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr Point2 operator/(Point2 a, Real s) noexcept { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Point2, Point2) noexcept = default;
};

constexpr Real dot(Point2 a, Point2 b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr Real cross(Point2 a, Point2 b) noexcept { return a.x * b.y - a.y * b.x; }
// Counter-clockwise quarter turn.
constexpr Point2 perp(Point2 a) noexcept { return {-a.y, a.x}; }
inline Real norm(Point2 a) noexcept { return std::hypot(a.x, a.y); }
inline Real distance(Point2 a, Point2 b) noexcept { return norm(b - a); }
inline Point2 normalized(Point2 a) noexcept { return a / norm(a); }
inline bool is_finite(Point2 p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }
constexpr Point2 midpoint(Point2 a, Point2 b) noexcept { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

inline Real bbox_diagonal(std::span<const Point2> pts) noexcept {
    if (pts.empty()) return 0.0;
    Real x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (const auto& p : pts) {
        x0 = std::min(x0, p.x); x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y); y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

inline Real geom_eps(std::span<const Point2> pts) noexcept {
    return kRelEps * bbox_diagonal(pts);
}

inline Real geom_eps(std::initializer_list<Point2> pts) noexcept {
    return geom_eps(std::span<const Point2>(pts.begin(), pts.size()));
}

struct LineSeg {
    Point2 a;
    Point2 b;

    Point2 direction() const noexcept { return b - a; }
    Real length() const noexcept { return distance(a, b); }
    Point2 mid() const noexcept { return midpoint(a, b); }
};

// Line through `origin` with unit `direction`. Use through() to build one
// from an arbitrary non-zero direction.
struct DirLine {
    Point2 origin;
    Point2 direction{1.0, 0.0};

    static DirLine through(Point2 origin, Point2 dir) noexcept { return {origin, normalized(dir)}; }

    Point2 normal() const noexcept { return perp(direction); }
    Point2 at(Real t) const noexcept { return origin + t * direction; }
    Real signed_distance(Point2 p) const noexcept { return cross(direction, p - origin); }
};

inline Point2 reflect_vector(Point2 v, Point2 unit_dir) noexcept {
    return 2.0 * dot(v, unit_dir) * unit_dir - v;
}

inline Point2 reflect_across(Point2 p, const DirLine& m) noexcept {
    return m.origin + reflect_vector(p - m.origin, m.direction);
}

// Mirror at the fold v between edges prev->v and v->next: the line through v
// that reflects the incoming travel direction onto the outgoing one. Its
// direction is perpendicular to (d_out - d_in), which stays well conditioned
// up to and including a fold-back.
inline DirLine bisector_mirror(Point2 prev, Point2 v, Point2 next) {
    const Real eps = geom_eps({prev, v, next});
    if (distance(prev, v) <= eps || distance(v, next) <= eps) {
        throw Error(ErrorCode::InvalidCore, "fold vertex coincides with a neighbour");
    }
    const Point2 d_in = normalized(v - prev);
    const Point2 d_out = normalized(next - v);
    const Point2 turn = d_out - d_in;
    if (norm(turn) <= kRelEps) {
        throw Error(ErrorCode::ZeroTurn, "edges continue straight through the vertex");
    }
    return DirLine::through(v, {turn.y, -turn.x});
}

// Transverse intersection of the open segments, if any. Touching at an
// endpoint is not a crossing. Collinear segments sharing more than a point
// throw CollinearOverlap.
inline std::optional<Point2> intersect_segments(LineSeg s1, LineSeg s2) {
    // canonical argument order makes the result bit-identical under swap
    auto lex_less = [](Point2 p, Point2 q) { return p.x < q.x || (p.x == q.x && p.y < q.y); };
    auto oriented = [&](LineSeg s) { return lex_less(s.b, s.a) ? LineSeg{s.b, s.a} : s; };
    s1 = oriented(s1);
    s2 = oriented(s2);
    if (lex_less(s2.a, s1.a) || (s2.a == s1.a && lex_less(s2.b, s1.b))) std::swap(s1, s2);
    const Real eps = geom_eps({s1.a, s1.b, s2.a, s2.b});
    const Point2 r = s1.direction();
    const Point2 s = s2.direction();
    const Real rl = norm(r), sl = norm(s);
    const Real denom = cross(r, s);
    const Point2 qp = s2.a - s1.a;

    if (std::abs(denom) <= kRelEps * rl * sl) {
        // parallel: collinear only if s2 lies on s1's line
        if (std::abs(cross(r, qp)) / rl > eps) return std::nullopt;
        const Point2 u = r / rl;
        Real t0 = dot(s2.a - s1.a, u), t1 = dot(s2.b - s1.a, u);
        if (t0 > t1) std::swap(t0, t1);
        const Real lo = std::max(Real{0}, t0), hi = std::min(rl, t1);
        if (hi - lo > eps) {
            throw Error(ErrorCode::CollinearOverlap, "segments share a sub-segment");
        }
        return std::nullopt;
    }

    const Real t = cross(qp, s) / denom;
    const Real u = cross(qp, r) / denom;
    const Real tt = eps / rl, tu = eps / sl;
    if (t <= tt || t >= 1.0 - tt || u <= tu || u >= 1.0 - tu) return std::nullopt;
    return s1.a + t * r;
}

inline Real point_segment_distance(Point2 p, LineSeg s) noexcept {
    const Point2 d = s.direction();
    const Real len2 = dot(d, d);
    if (len2 == 0.0) return distance(p, s.a);
    const Real t = std::clamp(dot(p - s.a, d) / len2, Real{0}, Real{1});
    return distance(p, s.a + t * d);
}

}  // namespace flatknot
