#pragma once

#include <ostream>

#include "trimax/atlas.hpp"
#include "trimax/calabi.hpp"
#include "trimax/numfmt.hpp"

namespace trimax {

// Sweep CSV: one row per sampled apex angle, then one summary row per
// detected crossover reusing the four columns.
inline void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "apex_deg,s_leg_area,s_base_area,diff\n";
    for (const auto& r : sweep.rows) {
        os << fmt_sig(r.apex_deg) << ',' << fmt_sig(r.leg_area) << ','
           << fmt_sig(r.base_area) << ',' << fmt_sig(r.leg_area - r.base_area) << '\n';
    }
    for (const auto& c : sweep.crossovers) {
        os << "crossover," << fmt_sig(c.lo_deg) << ',' << fmt_sig(c.hi_deg) << ','
           << fmt_sig(c.refined_deg) << '\n';
    }
}

inline void write_atlas_csv(std::ostream& os, const std::vector<AtlasRow>& rows) {
    os << "x,y,class,pattern\n";
    for (const auto& r : rows) {
        os << fmt_sig(r.x) << ',' << fmt_sig(r.y) << ',' << to_string(r.label.cls.kind)
           << ',' << r.label.pattern_string() << '\n';
    }
}

}  // namespace trimax
