#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "trimax/atlas.hpp"
#include "trimax/calabi.hpp"
#include "trimax/geom.hpp"
#include "trimax/inscribed.hpp"
#include "trimax/march.hpp"
#include "trimax/numfmt.hpp"
#include "trimax/wedged.hpp"

namespace trimax {

// Plain SVG 1.1 output. Geometry is written in the mathematical y-up frame;
// a single top-level transform flips to the SVG y-down frame, so every
// coordinate in the file equals the computed value.
class SvgCanvas {
public:
    SvgCanvas(double xmin, double xmax, double ymin, double ymax, double width_px = 640) {
        xmin_ = xmin;
        ymax_ = ymax;
        scale_ = width_px / (xmax - xmin);
        width_ = width_px;
        height_ = (ymax - ymin) * scale_;
        stroke_w_ = (xmax - xmin) / 400;
    }

    double stroke_width() const { return stroke_w_; }

    void line(Point p, Point q, const std::string& style) {
        body_ << "<line x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\""
              << num(q.x) << "\" y2=\"" << num(q.y) << "\" " << style << "/>\n";
    }

    void polyline(const std::vector<Point>& pts, const std::string& style) {
        body_ << "<polyline points=\"" << coords(pts) << "\" fill=\"none\" " << style
              << "/>\n";
    }

    template <class Pts>
    void polygon(const Pts& pts, const std::string& style) {
        std::vector<Point> v(pts.begin(), pts.end());
        body_ << "<polygon points=\"" << coords(v) << "\" " << style << "/>\n";
    }

    void circle(Point c, double r, const std::string& style, const std::string& id = "") {
        body_ << "<circle";
        if (!id.empty()) body_ << " id=\"" << id << "\"";
        body_ << " cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
              << "\" " << style << "/>\n";
    }

    std::string stroke(const std::string& color, double width_factor = 1.0,
                       const std::string& extra = "") const {
        std::string s = "stroke=\"" + color + "\" stroke-width=\"" +
                        num(stroke_w_ * width_factor) + "\"";
        if (!extra.empty()) s += " " + extra;
        return s;
    }

    std::string str() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
            << num(width_) << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 "
            << num(width_) << " " << num(height_) << "\">\n"
            << "<g transform=\"translate(" << num(-xmin_ * scale_) << " "
            << num(ymax_ * scale_) << ") scale(" << num(scale_) << " " << num(-scale_)
            << ")\">\n"
            << body_.str() << "</g>\n</svg>\n";
        return out.str();
    }

private:
    static std::string num(double v) { return fmt_sig(v, 9); }

    std::string coords(const std::vector<Point>& pts) const {
        std::string s;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ' ';
            s += num(pts[i].x) + "," + num(pts[i].y);
        }
        return s;
    }

    std::ostringstream body_;
    double xmin_ = 0, ymax_ = 0, scale_ = 1, width_ = 0, height_ = 0, stroke_w_ = 1;
};

namespace detail {

inline SvgCanvas canvas_for(const Triangle& t) {
    double xmin = std::min({t.A.x, t.B.x, t.C.x});
    double xmax = std::max({t.A.x, t.B.x, t.C.x});
    double ymin = std::min({t.A.y, t.B.y, t.C.y});
    double ymax = std::max({t.A.y, t.B.y, t.C.y});
    const double margin = 0.12 * std::max(xmax - xmin, ymax - ymin);
    return SvgCanvas(xmin - margin, xmax + margin, ymin - margin, ymax + margin);
}

inline void draw_triangle(SvgCanvas& svg, const Triangle& t) {
    svg.polygon(std::vector<Point>{t.A, t.B, t.C},
                "fill=\"none\" " + svg.stroke("#222", 1.5));
}

inline const char* solution_color(int i) {
    constexpr const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    return colors[i % 4];
}

}  // namespace detail

enum class FigureKind { Parallelogram, Rectangle, Square, WedgedSquare, WedgedRect, Polya };

// Renders one of the constructions as SVG. `base` applies to the square,
// polya and wedged figures. Throws the construction's own error when the
// figure is inapplicable to the triangle.
inline std::string render_figure(const Triangle& t, FigureKind which, SideId base) {
    SvgCanvas svg = detail::canvas_for(t);
    detail::draw_triangle(svg, t);
    const std::string fill_none = "fill=\"none\" ";

    switch (which) {
        case FigureKind::Parallelogram: {
            const auto sols = max_parallelograms(t);
            for (size_t i = 0; i < sols.size(); ++i)
                svg.polygon(sols[i].vertices,
                            fill_none + svg.stroke(detail::solution_color(static_cast<int>(i))));
            break;
        }
        case FigureKind::Rectangle: {
            const auto sols = max_rectangles(t);
            for (size_t i = 0; i < sols.size(); ++i)
                svg.polygon(sols[i].vertices,
                            fill_none + svg.stroke(detail::solution_color(static_cast<int>(i))));
            break;
        }
        case FigureKind::Square: {
            const auto sol = construct_inscribed_square(t, base);
            svg.polygon(sol.vertices, fill_none + svg.stroke(detail::solution_color(0)));
            break;
        }
        case FigureKind::Polya: {
            const auto trace = polya_construction(t, base);
            svg.polygon(trace.seed, fill_none + svg.stroke("#999", 1.0,
                                                           "stroke-dasharray=\"0.02\""));
            svg.line(trace.ray_from, trace.hit, svg.stroke("#999", 1.0));
            svg.circle(trace.hit, 1.5 * svg.stroke_width(), "fill=\"#999\"");
            svg.polygon(trace.square.vertices, fill_none + svg.stroke(detail::solution_color(0)));
            break;
        }
        case FigureKind::WedgedSquare: {
            const TriangleClass cls = classify(t);
            if (cls.kind != ClassKind::Obtuse)
                throw NotObtuseAtVertex("render_figure: wedged square needs an obtuse triangle");
            const auto sol = construct_wedged_square(t, cls.vertex, base);
            // the 45-degree diagonal ray that fixes the far corner
            svg.line(sol.vertices[0], sol.vertices[2], svg.stroke("#999", 1.0));
            svg.polygon(sol.vertices, fill_none + svg.stroke(detail::solution_color(0)));
            break;
        }
        case FigureKind::WedgedRect: {
            const auto sol = max_wedged_rectangle(t, base);
            svg.polygon(sol.vertices, fill_none + svg.stroke(detail::solution_color(0)));
            break;
        }
    }
    return svg.str();
}

// Atlas picture in the normalized frame: domain boundary circles, the
// isosceles line, both equality cubics (marched zero sets), the sampled
// region points colored by pattern, and the Calabi point.
inline std::string render_atlas_svg(const std::vector<AtlasRow>& rows, int curve_cells = 256) {
    SvgCanvas svg(-1.06, -0.44, -0.05, 1.05, 640);

    svg.circle({0, 0}, 1.0, "fill=\"none\" " + svg.stroke("#888"));
    svg.circle({-0.5, 0}, 0.5, "fill=\"none\" " + svg.stroke("#888"));
    svg.line({-0.5, 0}, {-0.5, 1.0}, svg.stroke("#888", 1.0, "stroke-dasharray=\"0.02\""));
    svg.line({-1.0, 0}, {0.0, 0}, svg.stroke("#222", 1.5));

    // deterministic color per sign pattern
    const auto pattern_color = [](const std::string& p) -> std::string {
        unsigned h = 0;
        for (char ch : p) h = h * 31 + static_cast<unsigned>(ch);
        static const char* palette[] = {"#a6cee3", "#fdbf6f", "#b2df8a", "#fb9a99",
                                        "#cab2d6", "#ffff99", "#1f78b4", "#33a02c"};
        return palette[h % 8];
    };
    for (const auto& r : rows) {
        svg.circle({r.x, r.y}, 0.004,
                   "fill=\"" + pattern_color(r.label.pattern_string()) + "\"");
    }

    for (const auto& seg :
         march_zero_set([](Point p) { return equality_curve_ab(p); }, -1.0, -0.5, 0.0,
                        1.0, curve_cells, curve_cells))
        svg.line(seg[0], seg[1], svg.stroke("#d62728", 1.2));
    for (const auto& seg :
         march_zero_set([](Point p) { return equality_curve_ac(p); }, -1.0, -0.5, 0.0,
                        1.0, curve_cells, curve_cells))
        svg.line(seg[0], seg[1], svg.stroke("#1f77b4", 1.2));

    const CalabiSolution cal = solve_calabi();
    const Point E{-0.5, std::sqrt(1 / (cal.ratio * cal.ratio) - 0.25)};
    svg.circle(E, 0.012, "fill=\"#000\"", "calabi-point");
    return svg.str();
}

}  // namespace trimax
