#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "trimax/geom.hpp"

namespace trimax {

enum class PolygonKind { Parallelogram, Rectangle, Square, WedgedSquare, WedgedRectangle };

inline const char* to_string(PolygonKind k) {
    switch (k) {
        case PolygonKind::Parallelogram: return "parallelogram";
        case PolygonKind::Rectangle: return "rectangle";
        case PolygonKind::Square: return "square";
        case PolygonKind::WedgedSquare: return "wedged_square";
        default: return "wedged_rectangle";
    }
}

// A solved maximal polygon. `area` carries the closed-form value; the
// vertices are the literal construction, so shoelace(vertices) must agree.
struct PolygonSolution {
    PolygonKind kind = PolygonKind::Parallelogram;
    std::array<Point, 4> vertices{};
    SideId base = SideId::a;
    std::optional<SideId> also_base;  // right triangles: coincident rectangle on both legs
    double area = 0;
    std::map<std::string, double> params;
};

inline double shoelace_area(const std::array<Point, 4>& v) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += cross(v[i], v[(i + 1) % 4]);
    return std::abs(s) / 2;
}

enum class SquareKind { Inscribed, Wedged, None };

inline const char* to_string(SquareKind k) {
    switch (k) {
        case SquareKind::Inscribed: return "inscribed";
        case SquareKind::Wedged: return "wedged";
        default: return "none";
    }
}

// Side lengths of the three largest enclosed squares, one per base side.
struct SquareTriple {
    double s_a = 0, s_b = 0, s_c = 0;
    std::array<SquareKind, 3> kinds{SquareKind::None, SquareKind::None, SquareKind::None};

    double side(SideId s) const {
        switch (s) {
            case SideId::a: return s_a;
            case SideId::b: return s_b;
            default: return s_c;
        }
    }

    SquareKind kind(SideId s) const { return kinds[static_cast<int>(s)]; }
};

}  // namespace trimax
