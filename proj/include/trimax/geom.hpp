#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trimax {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error { using Error::Error; };
struct InvalidAngles : Error { using Error::Error; };
struct NonPositiveInput : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct ObtuseBaseAngle : Error { using Error::Error; };
struct NotAcute : Error { using Error::Error; };
struct NotObtuse : Error { using Error::Error; };
struct NotObtuseAtVertex : Error { using Error::Error; };
struct NotObtuseOnBase : Error { using Error::Error; };
struct BaseNotAdjacent : Error { using Error::Error; };
struct SidesNotSorted : Error { using Error::Error; };
struct OutsideDomain : Error { using Error::Error; };
struct NoBracket : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Planar primitives
// ---------------------------------------------------------------------------

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
inline Point operator*(Point p, double k) { return k * p; }

inline double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point p, Point q) { return norm(p - q); }
inline Point midpoint(Point p, Point q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }
inline Point lerp(Point p, Point q, double t) { return p + t * (q - p); }
inline Point perp(Point p) { return {-p.y, p.x}; }

inline Point normalized(Point p) {
    const double n = norm(p);
    return {p.x / n, p.y / n};
}

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Intersection parameter t such that p + t*d lies on the line through q0, q1.
// Throws OutOfRange when the line and direction are (numerically) parallel.
inline double line_intersect_param(Point p, Point d, Point q0, Point q1) {
    const Point e = q1 - q0;
    const double denom = cross(d, e);
    if (std::abs(denom) < 1e-300)
        throw OutOfRange("line_intersect_param: parallel lines");
    return cross(q0 - p, e) / denom;
}

inline Point line_intersect(Point p, Point d, Point q0, Point q1) {
    return p + line_intersect_param(p, d, q0, q1) * d;
}

// Foot of the perpendicular from p onto the line through q0, q1.
inline Point project_onto_line(Point p, Point q0, Point q1) {
    const Point e = q1 - q0;
    const double t = dot(p - q0, e) / dot(e, e);
    return q0 + t * e;
}

inline double dist_to_line(Point p, Point q0, Point q1) {
    return std::abs(cross(q1 - q0, p - q0)) / dist(q0, q1);
}

// ---------------------------------------------------------------------------
// Triangle
// ---------------------------------------------------------------------------

enum class VertexId { A, B, C };
enum class SideId { a, b, c };  // a = BC, b = CA, c = AB

constexpr std::array<VertexId, 3> all_vertices{VertexId::A, VertexId::B, VertexId::C};
constexpr std::array<SideId, 3> all_sides{SideId::a, SideId::b, SideId::c};

inline const char* to_string(VertexId v) {
    switch (v) {
        case VertexId::A: return "A";
        case VertexId::B: return "B";
        default: return "C";
    }
}

inline const char* to_string(SideId s) {
    switch (s) {
        case SideId::a: return "a";
        case SideId::b: return "b";
        default: return "c";
    }
}

// Vertex opposite a side, and vice versa.
inline VertexId opposite_vertex(SideId s) {
    switch (s) {
        case SideId::a: return VertexId::A;
        case SideId::b: return VertexId::B;
        default: return VertexId::C;
    }
}

inline SideId opposite_side(VertexId v) {
    switch (v) {
        case VertexId::A: return SideId::a;
        case VertexId::B: return SideId::b;
        default: return SideId::c;
    }
}

// Vertices are stored exactly as given; winding is never altered. All
// derived quantities (areas, heights, interior directions) are computed
// from the actual winding, so clockwise input behaves like counterclockwise.
struct Triangle {
    Point A, B, C;

    Point vertex(VertexId v) const {
        switch (v) {
            case VertexId::A: return A;
            case VertexId::B: return B;
            default: return C;
        }
    }

    // Endpoints of a side in canonical order, plus the opposite vertex:
    // a -> (B, C; A), b -> (C, A; B), c -> (A, B; C).
    std::array<Point, 3> side_frame(SideId s) const {
        switch (s) {
            case SideId::a: return {B, C, A};
            case SideId::b: return {C, A, B};
            default: return {A, B, C};
        }
    }

    double side_length(SideId s) const {
        const auto f = side_frame(s);
        return dist(f[0], f[1]);
    }

    double signed_area() const { return cross(B - A, C - A) / 2; }
    double area() const { return std::abs(signed_area()); }
    bool ccw() const { return signed_area() > 0; }

    double longest_side() const {
        return std::max({side_length(SideId::a), side_length(SideId::b),
                         side_length(SideId::c)});
    }
};

// Scale-relative tolerances. The area threshold is quadratic in the longest
// side so acceptance is invariant under uniform scaling.
constexpr double kEpsAngle = 1e-9;  // radians

inline double eps_area(double longest_side) {
    return 1e-12 * longest_side * longest_side;
}

inline double eps_geom(const Triangle& t) { return 1e-9 * t.longest_side(); }

inline Triangle make_triangle(Point A, Point B, Point C) {
    if (!finite(A) || !finite(B) || !finite(C))
        throw DegenerateTriangle("make_triangle: non-finite vertex");
    const Triangle t{A, B, C};
    const double twice_area = std::abs(cross(B - A, C - A));
    if (twice_area <= eps_area(t.longest_side()))
        throw DegenerateTriangle("make_triangle: collinear or zero-size vertices");
    return t;
}

// Triangle from the angles at A and B (degrees) and the length of side
// c = AB between them. A sits at the origin, B on the positive x axis.
inline Triangle triangle_from_angles(double alpha_deg, double beta_deg, double base_len) {
    if (!(alpha_deg > 0) || !(beta_deg > 0) || !(alpha_deg + beta_deg < 180) ||
        !std::isfinite(alpha_deg) || !std::isfinite(beta_deg))
        throw InvalidAngles("triangle_from_angles: angles must be positive and sum below 180");
    if (!(base_len > 0) || !std::isfinite(base_len))
        throw NonPositiveInput("triangle_from_angles: base length must be positive");
    const double alpha = alpha_deg * std::numbers::pi / 180;
    const double beta = beta_deg * std::numbers::pi / 180;
    const double gamma = std::numbers::pi - alpha - beta;
    const double b = base_len * std::sin(beta) / std::sin(gamma);  // law of sines
    const Point A{0, 0};
    const Point B{base_len, 0};
    const Point C{b * std::cos(alpha), b * std::sin(alpha)};
    return make_triangle(A, B, C);
}

inline double height(const Triangle& t, SideId base) {
    return 2 * t.area() / t.side_length(base);
}

// Interior angle at a vertex, in (0, pi).
inline double angle_at(const Triangle& t, VertexId v) {
    const SideId s = opposite_side(v);
    const auto f = t.side_frame(s);            // f[2] is the vertex itself
    const Point u = f[0] - f[2], w = f[1] - f[2];
    return std::atan2(std::abs(cross(u, w)), dot(u, w));
}

enum class ClassKind { Acute, Right, Obtuse };

inline const char* to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Acute: return "acute";
        case ClassKind::Right: return "right";
        default: return "obtuse";
    }
}

struct TriangleClass {
    ClassKind kind = ClassKind::Acute;
    VertexId vertex = VertexId::A;  // meaningful for Right/Obtuse only
};

// Classification by the largest interior angle. A tie with 90 degrees within
// kEpsAngle counts as Right, so the coincident-rectangle case is reachable.
inline TriangleClass classify(const Triangle& t) {
    VertexId widest = VertexId::A;
    double best = -1;
    for (VertexId v : all_vertices) {
        const double ang = angle_at(t, v);
        if (ang > best) {
            best = ang;
            widest = v;
        }
    }
    constexpr double half_pi = std::numbers::pi / 2;
    if (std::abs(best - half_pi) <= kEpsAngle) return {ClassKind::Right, widest};
    if (best > half_pi) return {ClassKind::Obtuse, widest};
    return {ClassKind::Acute, widest};
}

inline double deg_to_rad(double d) { return d * std::numbers::pi / 180; }
inline double rad_to_deg(double r) { return r * 180 / std::numbers::pi; }

// Unit direction along the base from P toward Q, and the unit normal on the
// interior side (the side holding the opposite vertex R).
struct BaseFrame {
    Point P, Q, R;   // base endpoints and opposite vertex
    Point u;         // unit along P -> Q
    Point n;         // unit normal pointing toward R
    double len = 0;  // |PQ|
};

inline BaseFrame base_frame(const Triangle& t, SideId base) {
    const auto f = t.side_frame(base);
    BaseFrame bf{f[0], f[1], f[2], {}, {}, dist(f[0], f[1])};
    bf.u = normalized(bf.Q - bf.P);
    Point n = perp(bf.u);
    if (dot(n, bf.R - bf.P) < 0) n = -1.0 * n;
    bf.n = n;
    return bf;
}

}  // namespace trimax
