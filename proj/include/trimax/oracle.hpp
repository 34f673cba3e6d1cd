#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "trimax/geom.hpp"
#include "trimax/inscribed.hpp"
#include "trimax/polygon.hpp"
#include "trimax/wedged.hpp"

namespace trimax {

// ---------------------------------------------------------------------------
// Brute-force maximizers, independent of the closed forms they validate.
// Everything here is deterministic for a fixed GridSpec: plain grids, no
// randomness, so derived values reproduce bit-for-bit.
// ---------------------------------------------------------------------------

struct GridSpec {
    int n = 1000;                                // subdivisions per parameter
    std::vector<std::array<double, 2>> bounds;   // optional per-parameter overrides
};

inline void check_grid(const GridSpec& g) {
    if (g.n < 2) throw OutOfRange("GridSpec: n must be at least 2");
}

struct OracleResult {
    double area = 0;
    PolygonSolution witness;
};

inline bool point_in_triangle(const Triangle& t, Point p, double eps) {
    const double orient = t.ccw() ? 1.0 : -1.0;
    const double d1 = orient * cross(t.B - t.A, p - t.A);
    const double d2 = orient * cross(t.C - t.B, p - t.B);
    const double d3 = orient * cross(t.A - t.C, p - t.C);
    const double slack = eps * t.longest_side();
    return d1 >= -slack && d2 >= -slack && d3 >= -slack;
}

// Scans the two-parameter family of parallelograms with sides parallel to
// the two sides meeting an anchor vertex: corners V + u*(W1-V) and
// V + v*(W2-V) plus the induced fourth corner, all anchors tried. For fixed
// u the area grows with v, so the grid maximum sits at the largest feasible
// v; that index is found by bisection over the grid instead of a full scan.
inline OracleResult brute_force_max_parallelogram(const Triangle& t, const GridSpec& g) {
    check_grid(g);
    const int n = g.n;
    OracleResult best;
    const std::array<std::array<Point, 3>, 3> anchors{{
        {t.A, t.B, t.C},
        {t.B, t.C, t.A},
        {t.C, t.A, t.B},
    }};
    for (const auto& [V, W1, W2] : anchors) {
        const Point e1 = W1 - V, e2 = W2 - V;
        for (int i = 0; i <= n; ++i) {
            const double u = static_cast<double>(i) / n;
            const auto feasible = [&](int j) {
                const double v = static_cast<double>(j) / n;
                return point_in_triangle(t, V + u * e1 + v * e2, 1e-9);
            };
            if (!feasible(0)) continue;
            int lo = 0, hi = n;
            while (lo < hi) {  // largest feasible j
                const int mid = (lo + hi + 1) / 2;
                if (feasible(mid))
                    lo = mid;
                else
                    hi = mid - 1;
            }
            const double v = static_cast<double>(lo) / n;
            const Point P = V + u * e1, Q = V + v * e2, R = V + u * e1 + v * e2;
            const double area = std::abs(cross(P - V, Q - V));
            if (area > best.area) {
                best.area = area;
                best.witness.kind = PolygonKind::Parallelogram;
                best.witness.vertices = {V, P, R, Q};
                best.witness.area = area;
                best.witness.params = {{"u", u}, {"v", v}};
            }
        }
    }
    return best;
}

// Scans rectangles with their base on the given side and top corners on the
// other two sides, parametrized by relative height.
inline OracleResult brute_force_max_rectangle(const Triangle& t, SideId base,
                                              const GridSpec& g) {
    check_grid(g);
    if (!detail::base_angles_non_obtuse(t, base))
        throw ObtuseBaseAngle("brute_force_max_rectangle: a base angle is obtuse");
    const auto f = t.side_frame(base);
    OracleResult best;
    for (int i = 0; i <= g.n; ++i) {
        const double ti = static_cast<double>(i) / g.n;
        const Point E1 = lerp(f[0], f[2], ti);
        const Point E2 = lerp(f[1], f[2], ti);
        const double w = dist_to_line(E1, f[0], f[1]);
        const double area = dist(E1, E2) * w;
        if (area > best.area) {
            best.area = area;
            best.witness.kind = PolygonKind::Rectangle;
            best.witness.vertices = {project_onto_line(E1, f[0], f[1]),
                                     project_onto_line(E2, f[0], f[1]), E2, E1};
            best.witness.base = base;
            best.witness.area = area;
            best.witness.params = {{"w", w}};
        }
    }
    return best;
}

// Scans wedged rectangles anchored at the obtuse vertex: base corner F
// slides along the base side, the far corner is lifted to the opposite side.
inline OracleResult brute_force_max_wedged_rectangle(const Triangle& t, SideId base,
                                                     const GridSpec& g) {
    check_grid(g);
    const TriangleClass cls = classify(t);
    const auto eps = detail::side_endpoints(base);
    if (cls.kind != ClassKind::Obtuse || (cls.vertex != eps[0] && cls.vertex != eps[1]))
        throw NotObtuseOnBase("brute_force_max_wedged_rectangle: no obtuse angle on base");
    const auto f = detail::wedge_frame(t, cls.vertex, base);
    OracleResult best;
    for (int i = 0; i <= g.n; ++i) {
        const double len = f.b * i / g.n;
        const Point F = f.V + len * f.u;
        const Point E = line_intersect(F, f.n, f.W, f.U);
        const double w = dot(E - F, f.n);
        if (w <= 0) continue;
        const double area = len * w;
        if (area > best.area) {
            best.area = area;
            best.witness.kind = PolygonKind::WedgedRectangle;
            best.witness.vertices = {f.V, f.V + w * f.n, E, F};
            best.witness.base = base;
            best.witness.area = area;
            best.witness.params = {{"e", len - f.b / 2}, {"w", w}};
        }
    }
    return best;
}

// Bisection for the inscribed-square side: the chord of the triangle at
// height s above the base shrinks monotonically, so width(s) - s has one
// root. GridSpec.n plays no role here; bounds[0], when given, overrides
// the bracket.
inline double brute_force_inscribed_square(const Triangle& t, SideId base,
                                           const GridSpec& g) {
    if (!detail::base_angles_non_obtuse(t, base))
        throw ObtuseBaseAngle("brute_force_inscribed_square: a base angle is obtuse");
    const auto f = t.side_frame(base);
    const double h = height(t, base);
    const double a = t.side_length(base);

    const auto chord_minus_s = [&](double s) {
        const double ti = s / h;
        const Point E1 = lerp(f[0], f[2], ti);
        const Point E2 = lerp(f[1], f[2], ti);
        return dist(E1, E2) - s;
    };

    double lo = 0, hi = std::min(h, a);
    if (!g.bounds.empty()) {
        lo = g.bounds[0][0];
        hi = g.bounds[0][1];
    }
    const double tol = 1e-13 * std::max(h, a);
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = (lo + hi) / 2;
        if (chord_minus_s(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

// Bisection root finder on a bracketing interval; the bracket width is
// reduced below tol.
template <class F>
double find_root(F&& f, double lo, double hi, double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw NoBracket("find_root: f(lo) and f(hi) have the same sign");
    while (hi - lo > tol) {
        const double mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
        const double fmid = f(mid);
        if (fmid == 0) return mid;
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace trimax
