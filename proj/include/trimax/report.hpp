#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "trimax/calabi.hpp"
#include "trimax/geom.hpp"
#include "trimax/inscribed.hpp"
#include "trimax/oracle.hpp"
#include "trimax/polygon.hpp"
#include "trimax/wedged.hpp"

namespace trimax {

using json = nlohmann::json;

inline json to_json(Point p) { return json::array({p.x, p.y}); }

inline json to_json(const PolygonSolution& s) {
    json j;
    j["kind"] = to_string(s.kind);
    j["base"] = to_string(s.base);
    if (s.also_base) j["also_base"] = to_string(*s.also_base);
    j["vertices"] = json::array();
    for (const Point& v : s.vertices) j["vertices"].push_back(to_json(v));
    j["area"] = s.area;
    j["params"] = s.params;
    return j;
}

inline json to_json(const SquareTriple& sq) {
    json j;
    j["s_a"] = sq.s_a;
    j["s_b"] = sq.s_b;
    j["s_c"] = sq.s_c;
    j["kinds"] = json::array({to_string(sq.kinds[0]), to_string(sq.kinds[1]),
                              to_string(sq.kinds[2])});
    return j;
}

struct ReportOptions {
    bool verify = false;
    int grid_n = 2000;  // oracle resolution under --verify
};

struct Report {
    json doc;
    bool verify_pass = true;
};

// Full solution report for one triangle. With verification enabled, every
// closed form is compared against its brute-force oracle; area maxima must
// agree within 5/n relative and square sides within 1e-9.
inline Report build_report(const Triangle& t, const ReportOptions& opt = {}) {
    Report rep;
    json& j = rep.doc;
    j["schema_version"] = 1;

    const TriangleClass cls = classify(t);
    json jt;
    jt["vertices"] = json::array({to_json(t.A), to_json(t.B), to_json(t.C)});
    jt["sides"] = {{"a", t.side_length(SideId::a)},
                   {"b", t.side_length(SideId::b)},
                   {"c", t.side_length(SideId::c)}};
    jt["angles_deg"] = {{"A", rad_to_deg(angle_at(t, VertexId::A))},
                        {"B", rad_to_deg(angle_at(t, VertexId::B))},
                        {"C", rad_to_deg(angle_at(t, VertexId::C))}};
    jt["area"] = t.area();
    jt["class"] = to_string(cls.kind);
    if (cls.kind != ClassKind::Acute) jt["apex_vertex"] = to_string(cls.vertex);
    j["triangle"] = jt;

    j["parallelograms"] = json::array();
    for (const auto& s : max_parallelograms(t)) j["parallelograms"].push_back(to_json(s));

    const auto rects = max_rectangles(t);
    j["rectangles"] = json::array();
    for (const auto& s : rects) j["rectangles"].push_back(to_json(s));

    const SquareTriple triple = enclosed_square_triple(t);
    j["square_triple"] = to_json(triple);

    std::vector<SideId> wedged_bases;
    for (SideId side : all_sides)
        if (triple.kind(side) == SquareKind::Wedged) wedged_bases.push_back(side);
    if (!wedged_bases.empty()) {
        json jw;
        jw["squares"] = json::array();
        jw["rectangles"] = json::array();
        for (SideId side : wedged_bases) {
            jw["squares"].push_back(to_json(construct_wedged_square(t, cls.vertex, side)));
            jw["rectangles"].push_back(to_json(max_wedged_rectangle(t, side)));
        }
        j["wedged"] = jw;
    }

    if (opt.verify) {
        const GridSpec grid{opt.grid_n, {}};
        const double area_tol = 5.0 / opt.grid_n;
        json jv;
        jv["grid_n"] = opt.grid_n;
        jv["area_rel_tolerance"] = area_tol;
        bool pass = true;

        const auto check_rel = [&](double closed, double oracle, double tol) {
            const double delta = std::abs(closed - oracle) / closed;
            pass = pass && delta <= tol;
            return delta;
        };

        {
            const auto r = brute_force_max_parallelogram(t, grid);
            const double closed = t.area() / 2;
            jv["parallelogram"] = {{"closed", closed},
                                   {"oracle", r.area},
                                   {"rel_delta", check_rel(closed, r.area, area_tol)}};
        }
        jv["rectangles"] = json::array();
        for (const auto& s : rects) {
            const auto r = brute_force_max_rectangle(t, s.base, grid);
            jv["rectangles"].push_back({{"base", to_string(s.base)},
                                        {"closed", s.area},
                                        {"oracle", r.area},
                                        {"rel_delta", check_rel(s.area, r.area, area_tol)}});
        }
        jv["wedged_rectangles"] = json::array();
        for (SideId side : wedged_bases) {
            const double closed = max_wedged_rectangle(t, side).area;
            const auto r = brute_force_max_wedged_rectangle(t, side, grid);
            jv["wedged_rectangles"].push_back(
                {{"base", to_string(side)},
                 {"closed", closed},
                 {"oracle", r.area},
                 {"rel_delta", check_rel(closed, r.area, area_tol)}});
        }
        jv["inscribed_squares"] = json::array();
        for (SideId side : all_sides) {
            if (triple.kind(side) != SquareKind::Inscribed) continue;
            const double closed = triple.side(side);
            const double oracle = brute_force_inscribed_square(t, side, grid);
            const double delta = std::abs(closed - oracle) / closed;
            pass = pass && delta <= 1e-9;
            jv["inscribed_squares"].push_back({{"base", to_string(side)},
                                               {"closed", closed},
                                               {"oracle", oracle},
                                               {"rel_delta", delta}});
        }
        jv["pass"] = pass;
        rep.verify_pass = pass;
        j["verify"] = jv;
    }
    return rep;
}

}  // namespace trimax
