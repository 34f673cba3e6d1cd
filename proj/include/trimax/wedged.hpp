#pragma once

#include <array>
#include <optional>

#include "trimax/geom.hpp"
#include "trimax/inscribed.hpp"
#include "trimax/polygon.hpp"

namespace trimax {

// ---------------------------------------------------------------------------
// Wedged squares and rectangles: one corner sits ON the obtuse vertex, one
// side runs along an adjacent leg, and the far corner touches the opposite
// side. Inscription is impossible on a base with an obtuse angle, so these
// are the maximal enclosed shapes there.
// ---------------------------------------------------------------------------

struct WedgeParams {
    double base_len = 0;  // b
    double theta = 0;     // angle at the far base vertex
    double e = 0;         // signed base-length perturbation from b/2
    double w_prime = 0;   // resulting rectangle height (b/2 - e) tan(theta)
};

inline WedgeParams make_wedge_params(double base_len, double theta, double e) {
    if (!(base_len > 0) || !std::isfinite(base_len) || !(theta > 0) ||
        !(theta < std::numbers::pi / 2))
        throw OutOfRange("make_wedge_params: need b > 0 and theta in (0, pi/2)");
    if (!(std::abs(e) <= base_len / 2 * (1 + 1e-12)))
        throw OutOfRange("make_wedge_params: |e| must not exceed b/2");
    return {base_len, theta, e, (base_len / 2 - e) * std::tan(theta)};
}

// Side of the wedged square on a base of length b whose far vertex carries
// angle theta; solves s/(b - s) = tan(theta).
inline double wedged_square_side(double b, double theta) {
    if (!(b > 0) || !std::isfinite(b) || !(theta > 0) || !(theta < std::numbers::pi / 2))
        throw OutOfRange("wedged_square_side: need b > 0 and theta in (0, pi/2)");
    const double sn = std::sin(theta), cs = std::cos(theta);
    return b * sn / (sn + cs);
}

namespace detail {

struct WedgeFrame {
    Point V;       // obtuse vertex
    Point W;       // far base endpoint (carries theta)
    Point U;       // remaining vertex; the opposite side is W-U
    Point u, n;    // unit along V->W and unit interior normal
    double b = 0;  // |VW|
    double theta = 0;
};

inline WedgeFrame wedge_frame(const Triangle& t, VertexId obtuse_v, SideId base) {
    const auto [p, q] = side_endpoints(base);
    if (p != obtuse_v && q != obtuse_v)
        throw BaseNotAdjacent("wedged construction: base does not meet the obtuse vertex");
    const VertexId far = (p == obtuse_v) ? q : p;
    VertexId rest = VertexId::A;
    for (VertexId v : all_vertices)
        if (v != obtuse_v && v != far) rest = v;

    WedgeFrame f;
    f.V = t.vertex(obtuse_v);
    f.W = t.vertex(far);
    f.U = t.vertex(rest);
    f.b = dist(f.V, f.W);
    f.theta = angle_at(t, far);
    f.u = normalized(f.W - f.V);
    Point n = perp(f.u);
    if (dot(n, f.U - f.V) < 0) n = -1.0 * n;
    f.n = n;
    return f;
}

}  // namespace detail

// Wedged square at the obtuse vertex on an adjacent base side. Built
// literally: the ray from the vertex at 45 degrees to the base meets the
// opposite side at the square's far corner D.
inline PolygonSolution construct_wedged_square(const Triangle& t, VertexId obtuse_v,
                                               SideId base) {
    const TriangleClass cls = classify(t);
    if (cls.kind != ClassKind::Obtuse || cls.vertex != obtuse_v)
        throw NotObtuseAtVertex("construct_wedged_square: triangle is not obtuse there");
    const auto f = detail::wedge_frame(t, obtuse_v, base);

    const Point diag = normalized(f.u + f.n);  // 45 degrees to the base
    const Point D = line_intersect(f.V, diag, f.W, f.U);
    const double side = dot(D - f.V, f.u);

    PolygonSolution sq;
    sq.kind = PolygonKind::WedgedSquare;
    sq.vertices = {f.V, f.V + side * f.u, D, f.V + side * f.n};
    sq.base = base;
    sq.area = side * side;
    sq.params = {{"s", side}, {"b", f.b}, {"theta", f.theta}};
    return sq;
}

// Area of the wedged rectangle with base b/2 + e and height (b/2 - e) tan(theta):
// (b^2/4 - e^2) tan(theta), uniquely maximal at e = 0.
inline double wedged_rectangle_area(double b, double theta, double e) {
    const WedgeParams p = make_wedge_params(b, theta, e);
    return (p.base_len / 2 + p.e) * p.w_prime;
}

// Maximal wedged rectangle on a base side with an obtuse endpoint: one
// corner at the obtuse vertex, base corner F at the side midpoint, far
// corner E on the opposite side.
inline PolygonSolution max_wedged_rectangle(const Triangle& t, SideId base) {
    const TriangleClass cls = classify(t);
    const auto eps = detail::side_endpoints(base);
    if (cls.kind != ClassKind::Obtuse || (cls.vertex != eps[0] && cls.vertex != eps[1]))
        throw NotObtuseOnBase("max_wedged_rectangle: no obtuse angle on that base");
    const auto f = detail::wedge_frame(t, cls.vertex, base);

    const Point F = midpoint(f.V, f.W);
    const Point E = line_intersect(F, f.n, f.W, f.U);
    const double w = dot(E - F, f.n);

    PolygonSolution rect;
    rect.kind = PolygonKind::WedgedRectangle;
    rect.vertices = {f.V, f.V + w * f.n, E, F};
    rect.base = base;
    rect.area = f.b * f.b / 4 * std::tan(f.theta);
    rect.params = {{"b", f.b}, {"theta", f.theta}, {"w", w}, {"e", 0.0}};
    return rect;
}

// Areas of the maximal rectangles of an obtuse triangle labeled a >= b >= c
// (obtuse at A), in side order: the inscribed midpoint rectangle on a, then
// the wedged rectangles on b and c. The triple is non-increasing.
inline std::array<double, 3> wedged_ordering_check(const Triangle& t) {
    if (classify(t).kind != ClassKind::Obtuse)
        throw NotObtuse("wedged_ordering_check: triangle must be obtuse");
    const double a = t.side_length(SideId::a);
    const double b = t.side_length(SideId::b);
    const double c = t.side_length(SideId::c);
    const double slack = 1e-12 * t.longest_side();
    if (!(a >= b - slack) || !(b >= c - slack))
        throw SidesNotSorted("wedged_ordering_check: labels must satisfy a >= b >= c");

    // obtuse at A leaves exactly one admissible inscribed base: side a
    const auto rects = max_rectangles(t);
    const double on_a = rects.front().area;
    const double on_b = max_wedged_rectangle(t, SideId::b).area;
    const double on_c = max_wedged_rectangle(t, SideId::c).area;
    return {on_a, on_b, on_c};
}

// (max wedged rectangle) - (wedged square)^2 area gap on the same base:
// (b^2/4) tan(theta) - (b sin(theta)/(sin(theta)+cos(theta)))^2. Evaluated
// in the factored form b^2 tan(theta) (sin - cos)^2 / (4 (sin + cos)^2),
// which is exactly nonnegative and vanishes only at theta = pi/4.
inline double wedged_rect_vs_square_gap(double b, double theta) {
    if (!(b > 0) || !std::isfinite(b) || !(theta > 0) || !(theta < std::numbers::pi / 2))
        throw OutOfRange("wedged_rect_vs_square_gap: need b > 0 and theta in (0, pi/2)");
    const double sn = std::sin(theta), cs = std::cos(theta);
    const double d = sn - cs, sum = sn + cs;
    return b * b * (sn / cs) * d * d / (4 * sum * sum);
}

// Largest enclosed square per base side: inscribed where both base angles
// are non-obtuse, otherwise wedged at the obtuse endpoint with theta taken
// at the far endpoint. Right base angles use the inscribed formula (the
// two formulas agree at the 90-degree boundary).
inline SquareTriple enclosed_square_triple(const Triangle& t) {
    SquareTriple out;
    for (SideId side : all_sides) {
        double s = 0;
        SquareKind kind = SquareKind::None;
        if (detail::base_angles_non_obtuse(t, side)) {
            s = inscribed_square_side(height(t, side), t.side_length(side));
            kind = SquareKind::Inscribed;
        } else {
            const auto [p, q] = detail::side_endpoints(side);
            const VertexId obtuse_v = angle_at(t, p) > angle_at(t, q) ? p : q;
            const VertexId far = (obtuse_v == p) ? q : p;
            s = wedged_square_side(t.side_length(side), angle_at(t, far));
            kind = SquareKind::Wedged;
        }
        switch (side) {
            case SideId::a: out.s_a = s; break;
            case SideId::b: out.s_b = s; break;
            default: out.s_c = s; break;
        }
        out.kinds[static_cast<int>(side)] = kind;
    }
    return out;
}

}  // namespace trimax
