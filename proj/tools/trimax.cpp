// trimax: maximal enclosed polygons in triangles.
//
// Subcommands: report, sweep, calabi, atlas, figure.
// Exit codes: 0 ok, 1 input error, 2 verification or applicability failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trimax/trimax.hpp"

namespace {

using namespace trimax;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFailed = 2;

struct TriangleArgs {
    std::vector<std::string> vertices;  // three "x,y" strings
    std::vector<double> angles;         // two angles in degrees
    std::string side;                   // "<letter>=<length>", e.g. "c=2"
};

void add_triangle_options(CLI::App* cmd, TriangleArgs& args) {
    auto* v = cmd->add_option("--vertices", args.vertices,
                              "Triangle vertices A B C as three x,y pairs")
                  ->expected(3);
    auto* a = cmd->add_option("--angles", args.angles,
                              "Interior angles at A and B, degrees")
                  ->expected(2);
    auto* s = cmd->add_option("--side", args.side,
                              "One side length as letter=value (default c=1)");
    a->excludes(v);
    s->excludes(v);
    s->needs(a);
}

Point parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error("expected x,y but got '" + text + "'");
    size_t done = 0;
    const double x = std::stod(text.substr(0, comma), &done);
    if (done != comma) throw Error("bad coordinate in '" + text + "'");
    const std::string rest = text.substr(comma + 1);
    const double y = std::stod(rest, &done);
    if (done != rest.size()) throw Error("bad coordinate in '" + text + "'");
    return {x, y};
}

Triangle triangle_from_args(const TriangleArgs& args) {
    if (!args.vertices.empty()) {
        return make_triangle(parse_point(args.vertices[0]), parse_point(args.vertices[1]),
                             parse_point(args.vertices[2]));
    }
    if (args.angles.size() != 2)
        throw Error("provide either --vertices or --angles (with optional --side)");
    const double alpha = args.angles[0], beta = args.angles[1];

    char side_letter = 'c';
    double side_len = 1.0;
    if (!args.side.empty()) {
        const auto eq = args.side.find('=');
        if (eq != 1 || args.side.size() < 3)
            throw Error("expected --side letter=value, e.g. c=2");
        side_letter = args.side[0];
        side_len = std::stod(args.side.substr(eq + 1));
        if (!(side_len > 0)) throw Error("side length must be positive");
    }
    if (!(alpha > 0) || !(beta > 0) || !(alpha + beta < 180))
        throw InvalidAngles("angles must be positive and sum below 180");

    // scale the c = AB length so the named side gets the requested value
    const double gamma = 180 - alpha - beta;
    double c_len = side_len;
    switch (side_letter) {
        case 'a': c_len = side_len * std::sin(deg_to_rad(gamma)) / std::sin(deg_to_rad(alpha)); break;
        case 'b': c_len = side_len * std::sin(deg_to_rad(gamma)) / std::sin(deg_to_rad(beta)); break;
        case 'c': break;
        default: throw Error("side letter must be one of a, b, c");
    }
    return triangle_from_angles(alpha, beta, c_len);
}

// Writes text to a file path or, when the path is empty, to stdout.
int emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitInput;
    }
    os << text;
    return os ? kExitOk : kExitInput;
}

int run_report(const TriangleArgs& targs, bool verify, int grid_n,
               const std::string& json_path) {
    Triangle t = triangle_from_args(targs);
    ReportOptions opt;
    opt.verify = verify;
    opt.grid_n = grid_n;
    const Report rep = build_report(t, opt);
    const int rc = emit(json_path, rep.doc.dump(2) + "\n");
    if (rc != kExitOk) return rc;
    if (verify && !rep.verify_pass) {
        std::cerr << "verification failed: an oracle delta exceeds tolerance\n";
        return kExitFailed;
    }
    return kExitOk;
}

int run_sweep(double min_deg, double max_deg, double step_deg, double legs,
              const std::string& csv_path) {
    const SweepResult sweep = sweep_isosceles(min_deg, max_deg, step_deg, legs);
    std::ostringstream os;
    write_sweep_csv(os, sweep);
    return emit(csv_path, os.str());
}

int run_calabi(int digits) {
    const CalabiSolution sol = solve_calabi();
    std::ostringstream os;
    os << "ratio = " << fmt_sig(sol.ratio, digits) << "\n"
       << "theta_deg = " << fmt_sig(rad_to_deg(sol.theta), digits) << "\n"
       << "apex_deg = " << fmt_sig(rad_to_deg(sol.apex_angle), digits) << "\n"
       << "square_side = " << fmt_sig(sol.s, digits) << "\n"
       << "cubic_residual = " << fmt_sig(calabi_cubic(sol.ratio), 3) << "\n";
    std::cout << os.str();
    return kExitOk;
}

int run_atlas(int nx, int ny, const std::string& csv_path, const std::string& svg_path) {
    const auto rows = atlas_rows(nx, ny);
    int rc = kExitOk;
    if (!csv_path.empty() || svg_path.empty()) {
        std::ostringstream os;
        write_atlas_csv(os, rows);
        rc = emit(csv_path, os.str());
        if (rc != kExitOk) return rc;
    }
    if (!svg_path.empty()) rc = emit(svg_path, render_atlas_svg(rows));
    return rc;
}

int run_figure(const TriangleArgs& targs, const std::string& which,
               std::optional<char> base_letter, const std::string& svg_path) {
    const Triangle t = triangle_from_args(targs);

    FigureKind kind;
    if (which == "parallelogram") kind = FigureKind::Parallelogram;
    else if (which == "rectangle") kind = FigureKind::Rectangle;
    else if (which == "square") kind = FigureKind::Square;
    else if (which == "wedged-square") kind = FigureKind::WedgedSquare;
    else if (which == "wedged-rect") kind = FigureKind::WedgedRect;
    else if (which == "polya") kind = FigureKind::Polya;
    else throw Error("unknown figure '" + which + "'");

    SideId base = SideId::a;
    if (base_letter) {
        base = *base_letter == 'a' ? SideId::a : *base_letter == 'b' ? SideId::b : SideId::c;
    } else if (kind == FigureKind::WedgedSquare || kind == FigureKind::WedgedRect) {
        // default to the first side adjacent to the obtuse vertex
        const TriangleClass cls = classify(t);
        if (cls.kind == ClassKind::Obtuse)
            base = cls.vertex == VertexId::A ? SideId::b : SideId::a;
    }
    return emit(svg_path, render_figure(t, kind, base));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal enclosed polygons in triangles"};
    app.require_subcommand(1);

    // report
    auto* report = app.add_subcommand("report", "full solution report for one triangle");
    TriangleArgs report_args;
    add_triangle_options(report, report_args);
    bool verify = false;
    int grid_n = 2000;
    std::string report_json;
    report->add_flag("--verify", verify, "cross-check closed forms against oracles");
    report->add_option("--grid-n", grid_n, "oracle grid resolution")->check(CLI::Range(2, 100000));
    report->add_option("--json", report_json, "write the JSON report to a file");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "isosceles apex sweep of enclosed-square areas");
    double sweep_min = 95, sweep_max = 105, sweep_step = 0.01, sweep_legs = 2;
    std::string sweep_csv;
    sweep->add_option("--min", sweep_min, "start apex angle, degrees")->required();
    sweep->add_option("--max", sweep_max, "end apex angle, degrees")->required();
    sweep->add_option("--step", sweep_step, "step, degrees")->required();
    sweep->add_option("--legs", sweep_legs, "leg length")->required();
    sweep->add_option("--csv", sweep_csv, "write CSV to a file");

    // calabi
    auto* calabi = app.add_subcommand("calabi", "the equal-squares triangle constants");
    int digits = 7;
    calabi->add_option("--digits", digits, "significant digits")->check(CLI::Range(1, 15));

    // atlas
    auto* atlas = app.add_subcommand("atlas", "classify the apex region by square ordering");
    int nx = 64, ny = 64;
    std::string atlas_csv, atlas_svg;
    atlas->add_option("--nx", nx, "grid columns")->check(CLI::Range(8, 4096));
    atlas->add_option("--ny", ny, "grid rows")->check(CLI::Range(8, 4096));
    atlas->add_option("--csv", atlas_csv, "write sample CSV to a file");
    atlas->add_option("--svg", atlas_svg, "write the region picture to a file");

    // figure
    auto* figure = app.add_subcommand("figure", "render a construction as SVG");
    TriangleArgs figure_args;
    add_triangle_options(figure, figure_args);
    std::string which, figure_svg, figure_base;
    figure->add_option("--which", which, "construction to draw")
        ->required()
        ->check(CLI::IsMember({"parallelogram", "rectangle", "square", "wedged-square",
                               "wedged-rect", "polya"}));
    figure->add_option("--base", figure_base, "base side: a, b or c")
        ->check(CLI::IsMember({"a", "b", "c"}));
    figure->add_option("--svg", figure_svg, "write SVG to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (report->parsed()) return run_report(report_args, verify, grid_n, report_json);
        if (sweep->parsed()) return run_sweep(sweep_min, sweep_max, sweep_step, sweep_legs, sweep_csv);
        if (calabi->parsed()) return run_calabi(digits);
        if (atlas->parsed()) return run_atlas(nx, ny, atlas_csv, atlas_svg);
        if (figure->parsed()) {
            std::optional<char> base;
            if (!figure_base.empty()) base = figure_base[0];
            return run_figure(figure_args, which, base, figure_svg);
        }
    } catch (const NotObtuseAtVertex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const NotObtuseOnBase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const ObtuseBaseAngle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const BaseNotAdjacent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
