#pragma once

#include <map>
#include <string>
#include <vector>

#include "trimax/calabi.hpp"

namespace trimax {

// Sampled classification of the canonical apex domain (x in [-1, -1/2],
// y in (0, 1], inside the unit circle about C). Cell centers are used so no
// sample ever lands on the degenerate y = 0 edge.

struct AtlasRow {
    double x = 0, y = 0;
    RegionLabel label;
};

// Rows ordered by (y, x); points outside the admissible lens are skipped.
inline std::vector<AtlasRow> atlas_rows(int nx, int ny) {
    if (nx < 8 || ny < 8) throw OutOfRange("atlas_rows: grid dims must be >= 8");
    std::vector<AtlasRow> rows;
    rows.reserve(static_cast<size_t>(nx) * ny / 2);
    for (int j = 0; j < ny; ++j) {
        const double y = (j + 0.5) / ny;
        for (int i = 0; i < nx; ++i) {
            const double x = -1.0 + (i + 0.5) * 0.5 / nx;
            const ApexPoint p{x, y};
            if (dist(p, {0, 0}) > 1 || dist(p, {-1, 0}) > 1) continue;
            rows.push_back({x, y, classify_apex(p)});
        }
    }
    return rows;
}

inline std::map<std::string, int> atlas_pattern_census(const std::vector<AtlasRow>& rows) {
    std::map<std::string, int> census;
    for (const auto& r : rows) ++census[r.label.pattern_string()];
    return census;
}

}  // namespace trimax
