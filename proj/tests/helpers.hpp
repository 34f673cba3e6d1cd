#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "trimax/geom.hpp"

// Test-side utilities: deterministic triangle generators and independent
// geometric checks (kept free of the library's solution paths).

namespace testutil {

using trimax::Point;
using trimax::Triangle;

inline Point rotate(Point p, double ang) {
    const double c = std::cos(ang), s = std::sin(ang);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Random rigid motion plus uniform scale, applied to all three vertices.
inline Triangle transformed(const Triangle& t, std::mt19937& rng) {
    std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> scale(0.3, 3.0);
    std::uniform_real_distribution<double> shift(-10.0, 10.0);
    const double a = ang(rng), k = scale(rng);
    const Point d{shift(rng), shift(rng)};
    const auto f = [&](Point p) { return k * rotate(p, a) + d; };
    return trimax::make_triangle(f(t.A), f(t.B), f(t.C));
}

// Acute triangle with margins away from right angles.
inline Triangle random_acute(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        const double alpha = 25 + 60 * u(rng);
        const double beta = 25 + 60 * u(rng);
        const double gamma = 180 - alpha - beta;
        if (gamma < 88 && gamma > 25 && alpha < 88 && beta < 88)
            return transformed(trimax::triangle_from_angles(alpha, beta, 1 + 2 * u(rng)), rng);
    }
}

// Acute scalene with angles A > B > C, hence sides a > b > c.
inline Triangle random_acute_scalene_sorted(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        const double A = 62 + 24 * u(rng);   // (62, 86)
        const double B = 47 + 12 * u(rng);   // (47, 59)
        const double C = 180 - A - B;
        if (C > 36 && C < B - 1 && B < A - 1)
            return transformed(trimax::triangle_from_angles(A, B, 1 + 2 * u(rng)), rng);
    }
}

// Right triangle built from exact perpendicular legs.
inline Triangle random_right(std::mt19937& rng) {
    std::uniform_real_distribution<double> len(0.5, 3.0);
    const Triangle t = trimax::make_triangle({0, 0}, {len(rng), 0}, {0, len(rng)});
    return transformed(t, rng);
}

// Obtuse triangle, apex angle at A.
inline Triangle random_obtuse(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double A = 95 + 55 * u(rng);
    const double rest = 180 - A;
    const double B = rest * (0.2 + 0.6 * u(rng));
    return transformed(trimax::triangle_from_angles(A, B, 1 + 2 * u(rng)), rng);
}

// Obtuse scalene with angles A > 90 and B > C strictly, so a > b > c.
inline Triangle random_obtuse_scalene_sorted(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (true) {
        const double A = 95 + 50 * u(rng);
        const double rest = 180 - A;
        const double B = rest * (0.55 + 0.35 * u(rng));
        const double C = rest - B;
        if (B < A - 1 && C > 1 && C < B - 0.5)
            return transformed(trimax::triangle_from_angles(A, B, 1 + 2 * u(rng)), rng);
    }
}

// Independent quadrilateral area (shoelace), for cross-checking solutions.
inline double quad_area(const std::array<Point, 4>& v) {
    double s = 0;
    for (int i = 0; i < 4; ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % 4];
        s += p.x * q.y - p.y * q.x;
    }
    return std::abs(s) / 2;
}

inline double dist_point_segment(Point p, Point a, Point b) {
    const Point e = b - a;
    const double t = std::clamp(trimax::dot(p - a, e) / trimax::dot(e, e), 0.0, 1.0);
    return trimax::dist(p, a + t * e);
}

inline double dist_to_boundary(const Triangle& t, Point p) {
    return std::min({dist_point_segment(p, t.A, t.B), dist_point_segment(p, t.B, t.C),
                     dist_point_segment(p, t.C, t.A)});
}

inline bool inside_closed(const Triangle& t, Point p, double eps) {
    const double o = t.signed_area() > 0 ? 1.0 : -1.0;
    return o * trimax::cross(t.B - t.A, p - t.A) >= -eps &&
           o * trimax::cross(t.C - t.B, p - t.B) >= -eps &&
           o * trimax::cross(t.A - t.C, p - t.C) >= -eps;
}

}  // namespace testutil
