#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "trimax/geom.hpp"
#include "trimax/oracle.hpp"
#include "trimax/wedged.hpp"

namespace trimax {

// ---------------------------------------------------------------------------
// The Calabi triangle (the unique non-equilateral triangle whose three
// largest enclosed squares are equal) and the classification of apex
// positions by the size ordering of those squares.
//
// Normalized frame throughout: C = (0, 0), B = (-1, 0), base a = BC = 1,
// apex A above the x axis with a the longest side.
// ---------------------------------------------------------------------------

// 2a^4 - 6a^3 + a^2 + 8a - 4; factors as (a - 2) * (2a^3 - 2a^2 - 3a + 2).
inline double calabi_quartic(double a) {
    return (((2 * a - 6) * a + 1) * a + 8) * a - 4;
}

// 2a^3 - 2a^2 - 3a + 2; its largest positive root is the Calabi side ratio.
inline double calabi_cubic(double a) {
    return ((2 * a - 2) * a - 3) * a + 2;
}

inline double calabi_cubic_deriv(double a) { return (6 * a - 4) * a - 3; }

struct CalabiSolution {
    double ratio = 0;       // longest/shortest side, shortest = 1
    double theta = 0;       // base angle C, radians
    double apex_angle = 0;  // radians, pi - 2*theta
    double h_a = 0;         // apex height for legs = 1
    double s = 0;           // common square side for legs = 1
};

// Bisection on [1.5, 1.6] down to 1e-6, then Newton to full precision.
inline CalabiSolution solve_calabi() {
    double a = find_root(calabi_cubic, 1.5, 1.6, 1e-6);
    for (int i = 0; i < 40; ++i) {
        const double step = calabi_cubic(a) / calabi_cubic_deriv(a);
        a -= step;
        if (std::abs(step) < 1e-16) break;
    }
    CalabiSolution out;
    out.ratio = a;
    out.theta = std::acos(a / 2);
    out.apex_angle = std::numbers::pi - 2 * out.theta;
    out.h_a = std::sqrt(1 - a * a / 4);
    out.s = a * out.h_a / (a + out.h_a);  // inscribed on the base; equals the wedged value
    return out;
}

using ApexPoint = Point;

// Locus of apex positions where the base square and the square on leg CA
// have equal sides (meaningful inside the obtuse semicircle):
// y^3 + x^2 y + 2x^2 + 2y^2 + 2x = 0. Positive above the curve (s_b larger),
// negative below (s_a larger).
inline double equality_curve_ab(ApexPoint p) {
    const double x = p.x, y = p.y;
    return y * y * y + x * x * y + 2 * x * x + 2 * y * y + 2 * x;
}

// Mirror locus for the square on leg AB, the previous cubic reflected about
// x = -1/2: y^3 + (x+1)^2 y + 2(x+1)^2 + 2y^2 - 2(x+1) = 0.
inline double equality_curve_ac(ApexPoint p) {
    const double x1 = p.x + 1, y = p.y;
    return y * y * y + x1 * x1 * y + 2 * x1 * x1 + 2 * y * y - 2 * x1;
}

// Polar form of the first equality curve about C: r = 1 - cot(mu/2) with
// mu in [pi/2, pi]. mu = pi gives B, mu -> pi/2 gives C.
inline double polar_curve_r(double mu) {
    if (!(mu >= std::numbers::pi / 2) || !(mu <= std::numbers::pi))
        throw OutOfRange("polar_curve_r: mu must lie in [pi/2, pi]");
    return 1 - std::cos(mu / 2) / std::sin(mu / 2);
}

enum class Ordering { Less, Equal, Greater };

inline char to_char(Ordering o) {
    return o == Ordering::Less ? '<' : o == Ordering::Equal ? '=' : '>';
}

// Sign pattern of (s_a - s_b, s_a - s_c, s_b - s_c) plus the triangle class.
struct RegionLabel {
    std::array<Ordering, 3> pattern{};
    TriangleClass cls;

    std::string pattern_string() const {
        return {to_char(pattern[0]), to_char(pattern[1]), to_char(pattern[2])};
    }
};

namespace detail {

// Transitively consistent comparisons at tolerance eps: values are grouped
// into equality clusters first, then compared by cluster rank.
inline std::array<Ordering, 3> cluster_pattern(double sa, double sb, double sc, double eps) {
    const std::array<double, 3> v{sa, sb, sc};
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return v[i] < v[j]; });
    std::array<int, 3> rank{};
    int r = 0;
    rank[idx[0]] = 0;
    for (int k = 1; k < 3; ++k) {
        if (v[idx[k]] - v[idx[k - 1]] > eps) ++r;
        rank[idx[k]] = r;
    }
    const auto cmp = [&](int i, int j) {
        if (rank[i] < rank[j]) return Ordering::Less;
        if (rank[i] > rank[j]) return Ordering::Greater;
        return Ordering::Equal;
    };
    return {cmp(0, 1), cmp(0, 2), cmp(1, 2)};
}

}  // namespace detail

// Tolerance for calling two square sides equal, relative to the unit base.
constexpr double kEpsCompare = 1e-9;

// Classifies an apex position in the normalized frame. Admissible points
// keep BC the longest side: y > 0 and max(|AC|, |AB|) <= 1. Both halves of
// the lens are accepted; mirrored points swap the roles of b and c.
inline RegionLabel classify_apex(ApexPoint p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !(p.y > 0))
        throw OutsideDomain("classify_apex: apex must lie strictly above BC");
    const Point C{0, 0}, B{-1, 0}, D{-0.5, 0};
    const double b = dist(p, C), c = dist(p, B);
    if (std::max(b, c) > 1 + 1e-9)
        throw OutsideDomain("classify_apex: BC must remain the longest side");

    const Triangle t = make_triangle(p, B, C);
    const SquareTriple sq = enclosed_square_triple(t);

    RegionLabel out;
    out.pattern = detail::cluster_pattern(sq.s_a, sq.s_b, sq.s_c, kEpsCompare);
    const double d = dist(p, D);
    if (std::abs(d - 0.5) <= kEpsCompare)
        out.cls = {ClassKind::Right, VertexId::A};
    else if (d < 0.5)
        out.cls = {ClassKind::Obtuse, VertexId::A};
    else
        out.cls = {ClassKind::Acute, VertexId::A};
    return out;
}

// ---------------------------------------------------------------------------
// Isosceles sweep: legs fixed, apex angle moved through the obtuse range,
// tracking the areas of the (equal) leg squares and the base square.
// ---------------------------------------------------------------------------

struct SweepRow {
    double apex_deg = 0;
    double leg_area = 0;   // area of each of the two equal leg squares
    double base_area = 0;  // area of the base square
};

struct Crossover {
    double lo_deg = 0;   // bracketing sample below the sign change
    double hi_deg = 0;   // bracketing sample above it
    double refined_deg = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<Crossover> crossovers;  // normally exactly one
};

namespace detail {

inline Triangle isosceles_from_apex(double apex_deg, double leg) {
    const double half = deg_to_rad(apex_deg) / 2;
    const Point A{0, 0};
    const Point B{-leg * std::sin(half), -leg * std::cos(half)};
    const Point C{leg * std::sin(half), -leg * std::cos(half)};
    return make_triangle(A, B, C);
}

}  // namespace detail

inline SweepResult sweep_isosceles(double apex_min_deg, double apex_max_deg,
                                   double step_deg, double leg) {
    if (!(apex_min_deg > 90) || !(apex_max_deg < 180) || !(apex_min_deg <= apex_max_deg) ||
        !(step_deg > 0) || !std::isfinite(step_deg))
        throw InvalidRange("sweep_isosceles: need 90 < min <= max < 180 and step > 0");
    if (!(leg > 0) || !std::isfinite(leg))
        throw InvalidRange("sweep_isosceles: leg length must be positive");

    const auto diff_at = [&](double apex_deg) {
        const SquareTriple sq = enclosed_square_triple(detail::isosceles_from_apex(apex_deg, leg));
        return sq.s_b * sq.s_b - sq.s_a * sq.s_a;  // leg area minus base area
    };

    SweepResult out;
    const long steps = static_cast<long>(
        std::floor((apex_max_deg - apex_min_deg) / step_deg + 1e-9));
    for (long k = 0; k <= steps; ++k) {
        const double ang = apex_min_deg + k * step_deg;
        const SquareTriple sq =
            enclosed_square_triple(detail::isosceles_from_apex(ang, leg));
        out.rows.push_back({ang, sq.s_b * sq.s_b, sq.s_a * sq.s_a});
    }
    for (size_t i = 1; i < out.rows.size(); ++i) {
        const double d0 = out.rows[i - 1].leg_area - out.rows[i - 1].base_area;
        const double d1 = out.rows[i].leg_area - out.rows[i].base_area;
        if (d0 == 0 || (d0 > 0) == (d1 > 0)) continue;
        Crossover c;
        c.lo_deg = out.rows[i - 1].apex_deg;
        c.hi_deg = out.rows[i].apex_deg;
        c.refined_deg = find_root(diff_at, c.lo_deg, c.hi_deg, 1e-12);
        out.crossovers.push_back(c);
    }
    return out;
}

}  // namespace trimax
