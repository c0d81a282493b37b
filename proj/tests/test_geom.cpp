#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "flatknot/geom.hpp"

using namespace flatknot;

namespace {

// Reflection across the line through the origin at angle t, as the matrix
// [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
Point2 matrix_reflect(Point2 p, double t) {
    const double c = std::cos(2 * t), s = std::sin(2 * t);
    return {c * p.x + s * p.y, s * p.x - c * p.y};
}

}  // namespace

TEST(ReflectAcross, AxisAndFixedPoint) {
    const DirLine xaxis{{0, 0}, {1, 0}};
    const Point2 r = reflect_across({0, 1}, xaxis);
    EXPECT_NEAR(r.x, 0.0, 1e-15);
    EXPECT_NEAR(r.y, -1.0, 1e-15);

    const DirLine m = DirLine::through({1, 2}, {3, -1});
    const Point2 on = m.at(0.7);
    const Point2 q = reflect_across(on, m);
    EXPECT_NEAR(q.x, on.x, 1e-14);
    EXPECT_NEAR(q.y, on.y, 1e-14);
}

TEST(ReflectAcross, DiagonalMatchesMatrix) {
    const DirLine diag = DirLine::through({0, 0}, {1, 1});
    const Point2 got = reflect_across({2, 0}, diag);
    const Point2 want = matrix_reflect({2, 0}, std::numbers::pi / 4);
    EXPECT_NEAR(got.x, want.x, 1e-15);
    EXPECT_NEAR(got.y, want.y, 1e-15);
    EXPECT_NEAR(got.x, 0.0, 1e-15);
    EXPECT_NEAR(got.y, 2.0, 1e-15);
}

TEST(BisectorMirror, RightAngleMapsIncomingOntoOutgoing) {
    const DirLine m = bisector_mirror({-1, 0}, {0, 0}, {0, 1});
    EXPECT_NEAR(std::abs(norm(m.direction)), 1.0, 1e-15);
    // travel direction in (+x) reflects to travel direction out (+y)
    const Point2 out = reflect_vector({1, 0}, m.direction);
    EXPECT_NEAR(out.x, 0.0, 1e-15);
    EXPECT_NEAR(out.y, 1.0, 1e-15);
    // equal angles with the two rays leaving the vertex
    const Real a1 = std::abs(dot(normalized(Point2{-1, 0}), m.direction));
    const Real a2 = std::abs(dot(normalized(Point2{0, 1}), m.direction));
    EXPECT_NEAR(a1, a2, 1e-15);
}

TEST(BisectorMirror, FoldBackIsPerpendicular) {
    const DirLine m = bisector_mirror({1, 0}, {0, 0}, {1, 0});
    EXPECT_NEAR(std::abs(m.direction.x), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m.direction.y), 1.0, 1e-15);
    EXPECT_NEAR(m.origin.x, 0.0, 0.0);
}

TEST(BisectorMirror, StraightThroughIsZeroTurn) {
    try {
        bisector_mirror({-1, 0}, {0, 0}, {1, 0});
        FAIL() << "expected ZeroTurn";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroTurn);
    }
}

TEST(BisectorMirror, CoincidentNeighbourRejected) {
    try {
        bisector_mirror({0, 0}, {0, 0}, {1, 0});
        FAIL() << "expected InvalidCore";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidCore);
    }
}

TEST(IntersectSegments, SymmetricX) {
    const auto p = intersect_segments({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}});
    ASSERT_TRUE(p);
    EXPECT_NEAR(p->x, 1.0, 1e-15);
    EXPECT_NEAR(p->y, 1.0, 1e-15);
}

TEST(IntersectSegments, ParallelDisjointAndTouching) {
    EXPECT_FALSE(intersect_segments({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}));
    // sharing an endpoint is not a transverse crossing
    EXPECT_FALSE(intersect_segments({{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}));
    // collinear, end to end
    EXPECT_FALSE(intersect_segments({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}));
}

TEST(IntersectSegments, CollinearOverlapThrows) {
    try {
        intersect_segments({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
        FAIL() << "expected CollinearOverlap";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CollinearOverlap);
    }
}

TEST(IntersectSegments, ArgumentOrderDoesNotMatter) {
    const LineSeg s1{{0.1, -0.3}, {2.7, 1.9}}, s2{{1.3, 2.2}, {0.4, -1.1}};
    const auto p = intersect_segments(s1, s2);
    const auto q = intersect_segments(s2, s1);
    const auto r = intersect_segments({s1.b, s1.a}, {s2.b, s2.a});
    ASSERT_TRUE(p && q && r);
    EXPECT_EQ(*p, *q);
    EXPECT_EQ(*p, *r);
}

TEST(Geom, EpsScalesWithInputs) {
    EXPECT_NEAR(geom_eps({{0, 0}, {3, 4}}), 5e-9, 1e-20);
    EXPECT_NEAR(geom_eps({{0, 0}, {3e6, 4e6}}), 5e-3, 1e-14);
}

TEST(PointSegmentDistance, Basics) {
    EXPECT_NEAR(point_segment_distance({0.5, 2}, {{0, 0}, {1, 0}}), 2.0, 1e-15);
    EXPECT_NEAR(point_segment_distance({3, 4}, {{0, 0}, {0, 0}}), 5.0, 1e-15);
    EXPECT_NEAR(point_segment_distance({-3, 4}, {{0, 0}, {1, 0}}), 5.0, 1e-15);
}
