#pragma once

#include <array>
#include <functional>
#include <vector>

#include "trimax/geom.hpp"

namespace trimax {

// Marching squares: line segments approximating the zero level set of f on
// a rectangular grid. Cells are visited row-major and corner cases emitted
// in a fixed order, so output is deterministic.
inline std::vector<std::array<Point, 2>> march_zero_set(
    const std::function<double(Point)>& f, double xmin, double xmax, double ymin,
    double ymax, int nx, int ny) {
    std::vector<std::array<Point, 2>> segments;
    const double dx = (xmax - xmin) / nx;
    const double dy = (ymax - ymin) / ny;

    // value grid
    std::vector<double> vals(static_cast<size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            vals[static_cast<size_t>(j) * (nx + 1) + i] = f({xmin + i * dx, ymin + j * dy});

    const auto value = [&](int i, int j) {
        return vals[static_cast<size_t>(j) * (nx + 1) + i];
    };
    const auto interp = [&](Point p0, double v0, Point p1, double v1) {
        const double t = v0 / (v0 - v1);
        return lerp(p0, p1, t);
    };

    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Point c00{xmin + i * dx, ymin + j * dy};
            const Point c10{xmin + (i + 1) * dx, ymin + j * dy};
            const Point c01{xmin + i * dx, ymin + (j + 1) * dy};
            const Point c11{xmin + (i + 1) * dx, ymin + (j + 1) * dy};
            const double v00 = value(i, j), v10 = value(i + 1, j);
            const double v01 = value(i, j + 1), v11 = value(i + 1, j + 1);

            int code = 0;
            if (v00 > 0) code |= 1;
            if (v10 > 0) code |= 2;
            if (v11 > 0) code |= 4;
            if (v01 > 0) code |= 8;
            if (code == 0 || code == 15) continue;

            // crossing points on the four edges, present when signs differ
            std::array<Point, 4> pt{};
            std::array<bool, 4> has{};
            if ((v00 > 0) != (v10 > 0)) { pt[0] = interp(c00, v00, c10, v10); has[0] = true; }
            if ((v10 > 0) != (v11 > 0)) { pt[1] = interp(c10, v10, c11, v11); has[1] = true; }
            if ((v01 > 0) != (v11 > 0)) { pt[2] = interp(c01, v01, c11, v11); has[2] = true; }
            if ((v00 > 0) != (v01 > 0)) { pt[3] = interp(c00, v00, c01, v01); has[3] = true; }

            std::array<int, 4> idx{};
            int count = 0;
            for (int k = 0; k < 4; ++k)
                if (has[k]) idx[count++] = k;
            if (count == 2) {
                segments.push_back({pt[idx[0]], pt[idx[1]]});
            } else if (count == 4) {
                // ambiguous saddle: split by the cell-center sign
                const double vc = f(midpoint(c00, c11));
                if ((vc > 0) == (v00 > 0)) {
                    segments.push_back({pt[0], pt[1]});
                    segments.push_back({pt[2], pt[3]});
                } else {
                    segments.push_back({pt[0], pt[3]});
                    segments.push_back({pt[1], pt[2]});
                }
            }
        }
    }
    return segments;
}

}  // namespace trimax
