#pragma once

#include <algorithm>
#include <vector>

#include "trimax/geom.hpp"
#include "trimax/polygon.hpp"

namespace trimax {

// ---------------------------------------------------------------------------
// Maximal inscribed parallelograms, rectangles and squares: quadrilaterals
// with every vertex on the triangle boundary.
// ---------------------------------------------------------------------------

namespace detail {

// The two vertices bounding a side, in canonical order.
inline std::array<VertexId, 2> side_endpoints(SideId s) {
    switch (s) {
        case SideId::a: return {VertexId::B, VertexId::C};
        case SideId::b: return {VertexId::C, VertexId::A};
        default: return {VertexId::A, VertexId::B};
    }
}

inline bool base_angles_non_obtuse(const Triangle& t, SideId base) {
    const auto [p, q] = side_endpoints(base);
    constexpr double limit = std::numbers::pi / 2 + kEpsAngle;
    return angle_at(t, p) <= limit && angle_at(t, q) <= limit;
}

}  // namespace detail

// The three maximal parallelograms: each is anchored at one vertex with the
// other three corners at side midpoints, and each has half the triangle area.
// Ordered by anchor vertex A, B, C.
inline std::array<PolygonSolution, 3> max_parallelograms(const Triangle& t) {
    std::array<PolygonSolution, 3> out;
    const std::array<std::array<Point, 3>, 3> cycles{{
        {t.A, t.B, t.C},  // anchor A
        {t.B, t.C, t.A},  // anchor B
        {t.C, t.A, t.B},  // anchor C
    }};
    // side holding the anchor->first-midpoint edge
    const std::array<SideId, 3> bases{SideId::c, SideId::a, SideId::b};
    for (int i = 0; i < 3; ++i) {
        const auto& [V, W1, W2] = cycles[i];
        PolygonSolution s;
        s.kind = PolygonKind::Parallelogram;
        s.vertices = {V, midpoint(V, W1), midpoint(W1, W2), midpoint(W2, V)};
        s.base = bases[i];
        const double a = t.side_length(bases[i]);
        const double h = height(t, bases[i]);
        s.area = h * a / 4;
        s.params = {{"a", a}, {"h", h}};
        out[i] = s;
    }
    return out;
}

// Competitor parallelogram BGHI with side BI on AB (base frame of side a):
// J sits on the midline FE at distance x from E, y follows from the
// similarity x/y = a/h, and the returned value is
//   (BDEF) - x*y - shoelace(BGHI),
// which vanishes identically for admissible x.
inline double parallelogram_identity_residual(const Triangle& t, double x) {
    const double a = t.side_length(SideId::a);
    const double h = height(t, SideId::a);
    if (!(x >= 0) || !(x <= a / 2 * (1 + 1e-12)))
        throw OutOfRange("parallelogram_identity_residual: x must lie in [0, a/2]");
    x = std::min(x, a / 2);

    const Point E = midpoint(t.C, t.A);
    const Point F = midpoint(t.A, t.B);
    const Point J = E + x * normalized(F - E);
    const double y = x * h / a;

    // line through J parallel to AB cuts CA at H and BC at G
    const Point dir = t.B - t.A;
    const Point H = line_intersect(J, dir, t.C, t.A);
    const Point G = line_intersect(J, dir, t.B, t.C);
    const Point I = t.B + (H - G);

    const double max_area = h * a / 4;  // (BDEF)
    const double competitor = shoelace_area({t.B, G, H, I});
    return max_area - x * y - competitor;
}

// Maximal inscribed rectangles: one per side whose base angles are both
// non-obtuse, with the top edge joining the midpoints of the other two
// sides. Right triangles report the two coincident leg rectangles once,
// flagged with both base sides.
inline std::vector<PolygonSolution> max_rectangles(const Triangle& t) {
    std::vector<PolygonSolution> out;
    for (SideId base : all_sides) {
        if (!detail::base_angles_non_obtuse(t, base)) continue;
        const auto f = t.side_frame(base);
        const Point M1 = midpoint(f[0], f[2]);  // mid of P-R
        const Point M2 = midpoint(f[1], f[2]);  // mid of Q-R
        const Point F1 = project_onto_line(M1, f[0], f[1]);
        const Point F2 = project_onto_line(M2, f[0], f[1]);
        PolygonSolution s;
        s.kind = PolygonKind::Rectangle;
        s.vertices = {F1, F2, M2, M1};
        s.base = base;
        const double a = t.side_length(base);
        const double h = height(t, base);
        s.area = h * a / 4;
        s.params = {{"a", a}, {"h", h}};
        out.push_back(s);
    }
    const TriangleClass cls = classify(t);
    if (cls.kind == ClassKind::Right) {
        // the rectangles on the two legs meeting the right angle coincide:
        // keep the first leg entry (side order) and flag it with the other leg
        const SideId hyp = opposite_side(cls.vertex);
        std::vector<PolygonSolution> merged;
        int first_leg = -1;
        for (auto& s : out) {
            if (s.base != hyp && first_leg >= 0) {
                merged[first_leg].also_base = s.base;
                continue;
            }
            if (s.base != hyp) first_leg = static_cast<int>(merged.size());
            merged.push_back(std::move(s));
        }
        out = std::move(merged);
    }
    return out;
}

// Side of the inscribed square on a base of length a with height h.
inline double inscribed_square_side(double h, double a) {
    if (!(h > 0) || !(a > 0) || !std::isfinite(h) || !std::isfinite(a))
        throw NonPositiveInput("inscribed_square_side: h and a must be positive");
    return h * a / (h + a);
}

// Intermediate objects of the dilation construction, kept for rendering.
struct PolyaTrace {
    std::array<Point, 4> seed;   // seed square D, E, F, G
    Point ray_from;              // base vertex P
    Point ray_through;           // seed corner G
    Point hit;                   // H on the far side
    PolygonSolution square;      // dilated result
};

// Inscribed square on `base` by dilation: seed a small square on the base
// near vertex P, shoot the ray P->G to the far side at H, and dilate the
// seed about P by |PH|/|PG|. The seed point sits 10% of the way up the
// adjacent side; the dilation makes the result independent of that choice.
inline PolyaTrace polya_construction(const Triangle& t, SideId base) {
    if (!detail::base_angles_non_obtuse(t, base))
        throw ObtuseBaseAngle("polya_construction: a base angle is obtuse");
    const BaseFrame bf = base_frame(t, base);

    const Point D = lerp(bf.P, bf.R, 0.10);
    const Point E = project_onto_line(D, bf.P, bf.Q);
    const double s0 = dist(D, E);
    const Point F = E + s0 * bf.u;
    const Point G = D + s0 * bf.u;

    const Point H = line_intersect(bf.P, G - bf.P, bf.Q, bf.R);
    const double k = dist(bf.P, H) / dist(bf.P, G);

    const auto dilate = [&](Point p) { return bf.P + k * (p - bf.P); };
    PolyaTrace trace;
    trace.seed = {D, E, F, G};
    trace.ray_from = bf.P;
    trace.ray_through = G;
    trace.hit = H;

    PolygonSolution sq;
    sq.kind = PolygonKind::Square;
    sq.vertices = {dilate(D), dilate(E), dilate(F), H};
    sq.base = base;
    const double side = dist(sq.vertices[0], sq.vertices[1]);
    sq.area = side * side;
    sq.params = {{"s", side}, {"a", bf.len}, {"h", height(t, base)}};
    trace.square = sq;
    return trace;
}

inline PolygonSolution construct_inscribed_square(const Triangle& t, SideId base) {
    return polya_construction(t, base).square;
}

// (max rectangle area) - (inscribed square area) on the same base:
// h*a/4 - (h*a/(h+a))^2. Evaluated in the factored form
// h*a*(h-a)^2 / (4*(h+a)^2), which is exactly nonnegative and exactly zero
// when h = a; the plain difference cancels catastrophically near h = a.
inline double square_vs_rectangle_gap(double h, double a) {
    if (!(h > 0) || !(a > 0) || !std::isfinite(h) || !std::isfinite(a))
        throw NonPositiveInput("square_vs_rectangle_gap: h and a must be positive");
    const double d = h - a, s = h + a;
    return h * a * d * d / (4 * s * s);
}

// Inscribed-square sides on all three bases of an acute triangle. For an
// acute scalene with a > b > c the triple is strictly increasing.
inline SquareTriple inscribed_square_triple(const Triangle& t) {
    if (classify(t).kind != ClassKind::Acute)
        throw NotAcute("inscribed_square_triple: triangle must be acute");
    SquareTriple out;
    out.s_a = inscribed_square_side(height(t, SideId::a), t.side_length(SideId::a));
    out.s_b = inscribed_square_side(height(t, SideId::b), t.side_length(SideId::b));
    out.s_c = inscribed_square_side(height(t, SideId::c), t.side_length(SideId::c));
    out.kinds = {SquareKind::Inscribed, SquareKind::Inscribed, SquareKind::Inscribed};
    return out;
}

}  // namespace trimax
