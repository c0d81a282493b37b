#pragma once

// The two canonical flat knots: the trefoil folded into a regular pentagon
// and the figure-eight folded into a semi-regular hexagon, with their
// closed-form length, width and L/W.

#include <array>
#include <cmath>
#include <numbers>
#include <string_view>

#include "flatknot/ribbon.hpp"

namespace flatknot {

inline constexpr Real kPhi = std::numbers::phi_v<Real>;

enum class Knot { trefoil, figure_eight };

constexpr std::string_view to_string(Knot k) noexcept {
    return k == Knot::trefoil ? "trefoil" : "figure_eight";
}

struct Construction {
    CoreCurve core;
    Weaving weaving;
};

// Regular pentagon: chord d = phi * edge.
struct PentagonParams {
    Real edge = 1.0;
    Real chord = kPhi;

    static PentagonParams from_edge(Real edge) noexcept { return {edge, kPhi * edge}; }
};

// Semi-regular hexagon of the folded figure-eight: b = sqrt(5/27) a, c = a/3.
struct HexagonParams {
    Real a = 3.0;
    Real b = std::sqrt(5.0L / 27.0L) * 3.0;
    Real c = 1.0;

    static HexagonParams from_a(Real a) noexcept { return {a, std::sqrt(5.0L / 27.0L) * a, a / 3.0}; }
};

// Vertices of a regular pentagon with the given edge, centered at the origin,
// counter-clockwise from the top.
inline std::array<Point2, 5> pentagon_vertices(Real edge) {
    const Real radius = edge / (2.0 * std::sin(std::numbers::pi_v<Real> / 5.0));
    std::array<Point2, 5> p;
    for (int k = 0; k < 5; ++k) {
        const Real t = std::numbers::pi_v<Real> / 2.0 + 2.0 * std::numbers::pi_v<Real> * k / 5.0;
        p[k] = {radius * std::cos(t), radius * std::sin(t)};
    }
    return p;
}

// Trefoil as a light path in the pentagon: enter at the middle of side 3,
// reflect at the middles of sides 0, 2 and 4, leave through side 1. The
// remaining two sides become the flush truncation cuts.
inline Construction pentagon_trefoil(Real edge) {
    if (!(edge > 0.0)) throw Error(ErrorCode::InvalidCore, "pentagon edge must be positive");
    const auto p = pentagon_vertices(edge);
    auto side_mid = [&](int k) { return midpoint(p[k], p[(k + 1) % 5]); };
    CoreCurve core({side_mid(3), side_mid(0), side_mid(2), side_mid(4), side_mid(1)}, false,
                   Truncation{0.0, 0.0, CutStyle::flush});
    Weaving w = alternating_weaving(core);
    return {std::move(core), std::move(w)};
}

// Corners of the hexagon bounding the folded figure-eight, counter-clockwise
// from (4a/3, 0).
inline std::array<Point2, 6> hexagon_corners(Real a) {
    const Real b = HexagonParams::from_a(a).b;
    return {{{4.0 * a / 3.0, 0.0}, {2.0 * a / 3.0, 2.0 * b}, {-2.0 * a / 3.0, 2.0 * b},
             {-4.0 * a / 3.0, 0.0}, {-2.0 * a / 3.0, -2.0 * b}, {2.0 * a / 3.0, -2.0 * b}}};
}

// Figure-eight center line: (a,b) -> (0,-2b) -> (-a,b) -> (a,-b) -> (0,2b) -> (-a,-b).
inline Construction hexagon_figure_eight(Real a) {
    if (!(a > 0.0)) throw Error(ErrorCode::InvalidCore, "hexagon parameter a must be positive");
    const Real b = HexagonParams::from_a(a).b;
    CoreCurve core({{a, b}, {0.0, -2.0 * b}, {-a, b}, {a, -b}, {0.0, 2.0 * b}, {-a, -b}}, false,
                   Truncation{0.0, 0.0, CutStyle::flush});
    Weaving w = alternating_weaving(core);
    return {std::move(core), std::move(w)};
}

struct ExpectedMeasure {
    Knot knot = Knot::trefoil;
    Real ratio_closed_form = 0.0;
    Real length_formula_value = 0.0;  // at unit pentagon edge / a = 3
    Real width_formula_value = 0.0;
    // trefoil only: 4(phi+1)/sqrt(2+phi), 4/sqrt(7-4phi), 4/sqrt(5-2 sqrt5)
    std::array<Real, 3> trefoil_forms{};
};

inline Real trefoil_width(Real edge) {
    const Real l = edge, d = kPhi * edge;
    return std::sqrt(3.0 * l * l - d * d + 2.0 * l * d) / 2.0;
}

inline Real trefoil_length(Real edge) { return 2.0 * (edge + kPhi * edge); }

inline Real figure_eight_length(Real a) {
    const Real b = HexagonParams::from_a(a).b;
    return 4.0 * std::sqrt(a * a + 9.0 * b * b) + std::sqrt(4.0 * a * a + 4.0 * b * b);
}

inline Real figure_eight_width(Real a) { return a * std::sqrt(10.0L) / 3.0; }

inline ExpectedMeasure expected_ratio(Knot knot) {
    ExpectedMeasure m;
    m.knot = knot;
    if (knot == Knot::trefoil) {
        const Real phi = kPhi;
        m.trefoil_forms = {4.0 * (phi + 1.0) / std::sqrt(2.0 + phi), 4.0 / std::sqrt(7.0 - 4.0 * phi),
                           4.0 / std::sqrt(5.0 - 2.0 * std::sqrt(5.0L))};
        m.ratio_closed_form = m.trefoil_forms[1];
        m.length_formula_value = trefoil_length(1.0);
        m.width_formula_value = trefoil_width(1.0);
    } else {
        m.ratio_closed_form = 32.0L / std::sqrt(15.0L);
        m.length_formula_value = figure_eight_length(3.0);
        m.width_formula_value = figure_eight_width(3.0);
    }
    return m;
}

}  // namespace flatknot
