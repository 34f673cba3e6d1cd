#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "trimax/calabi.hpp"
#include "trimax/oracle.hpp"

using namespace trimax;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("find_root basics") {
    const double calabi = find_root(calabi_cubic, 1.5, 1.6, 1e-12);
    CHECK_THAT(calabi, WithinAbs(1.5513875245483204, 1e-9));
    CHECK_THAT(calabi, WithinAbs(1.5513875, 1e-6));

    const double sqrt2 = find_root([](double x) { return x * x - 2; }, 1, 2, 1e-12);
    CHECK_THAT(sqrt2, WithinAbs(std::sqrt(2.0), 1e-11));

    CHECK_THROWS_AS(find_root([](double x) { return x * x - 2; }, 2, 3, 1e-12), NoBracket);
}

TEST_CASE("parallelogram oracle: unit right triangle and equilateral") {
    const Triangle unit = make_triangle({0, 0}, {1, 0}, {0, 1});
    const auto r = brute_force_max_parallelogram(unit, {1000, {}});
    CHECK(r.area >= 0.2495);
    CHECK(r.area <= 0.25 + 1e-12);

    const Triangle eq = triangle_from_angles(60, 60, 2);
    const auto req = brute_force_max_parallelogram(eq, {1000, {}});
    CHECK_THAT(req.area, WithinRel(std::sqrt(3.0) / 2, 5e-3));
    CHECK(req.area <= std::sqrt(3.0) / 2 * (1 + 1e-12));

    // a coarse grid still never exceeds the closed form
    const auto coarse = brute_force_max_parallelogram(eq, {2, {}});
    CHECK(coarse.area <= std::sqrt(3.0) / 2 * (1 + 1e-12));

    CHECK_THROWS_AS(brute_force_max_parallelogram(unit, {1, {}}), OutOfRange);
}

TEST_CASE("parallelogram oracle: witness stays inside the triangle") {
    std::mt19937 rng(401);
    for (int i = 0; i < 20; ++i) {
        const Triangle t = i % 2 ? testutil::random_acute(rng) : testutil::random_obtuse(rng);
        const auto r = brute_force_max_parallelogram(t, {200, {}});
        for (const Point& v : r.witness.vertices)
            CHECK(testutil::inside_closed(t, v, eps_geom(t)));
        CHECK_THAT(testutil::quad_area(r.witness.vertices), WithinRel(r.area, 1e-9));
        CHECK(r.area <= t.area() / 2 * (1 + 1e-9));
    }
}

TEST_CASE("rectangle oracle: 3-4-5 and equilateral") {
    const Triangle t345 = make_triangle({0, 0}, {4, 0}, {0, 3});
    const auto r = brute_force_max_rectangle(t345, SideId::c, {2000, {}});  // base AB, length 4
    REQUIRE(t345.side_length(SideId::c) == 4.0);
    CHECK_THAT(r.area, WithinRel(3.0, 1e-3));
    CHECK(r.area <= 3.0 + 1e-9);
    // argmax height near h/2
    CHECK_THAT(r.witness.params.at("w"), WithinAbs(1.5, 3.0 * 5 / 2000.0));

    const Triangle eq = triangle_from_angles(60, 60, 1);
    const auto req = brute_force_max_rectangle(eq, SideId::c, {2000, {}});
    CHECK_THAT(req.area, WithinRel(std::sqrt(3.0) / 8, 1e-3));

    const Triangle obtuse = triangle_from_angles(120, 30, 1);
    CHECK_THROWS_AS(brute_force_max_rectangle(obtuse, SideId::b, {100, {}}), ObtuseBaseAngle);
}

TEST_CASE("wedged rectangle oracle: Calabi leg and concavity") {
    const CalabiSolution sol = solve_calabi();
    const Triangle t = triangle_from_angles(rad_to_deg(sol.apex_angle),
                                            rad_to_deg(sol.theta), 1.0);
    const auto r = brute_force_max_wedged_rectangle(t, SideId::b, {10000, {}});
    CHECK_THAT(r.area, WithinAbs(0.2034016, 1e-3));
    CHECK(r.area <= 0.2034017);
    // argmax near the midpoint: |e| small
    CHECK_THAT(r.witness.params.at("e"), WithinAbs(0.0, 5.0 / 10000));

    // theta = 45: area 1 with b = 2
    const double cdeg = 45, adeg = 105;
    const double c_len = 2 * std::sin(deg_to_rad(cdeg)) / std::sin(deg_to_rad(180 - adeg - cdeg));
    const Triangle t45 = triangle_from_angles(adeg, 180 - adeg - cdeg, c_len);
    REQUIRE_THAT(t45.side_length(SideId::b), WithinRel(2.0, 1e-12));
    const auto r45 = brute_force_max_wedged_rectangle(t45, SideId::b, {4000, {}});
    CHECK_THAT(r45.area, WithinRel(1.0, 1e-3));

    // discrete concavity of the area in the scan parameter
    std::vector<double> areas;
    const auto f = detail::wedge_frame(t, VertexId::A, SideId::b);
    for (int i = 0; i <= 100; ++i) {
        const double len = f.b * i / 100;
        const Point F = f.V + len * f.u;
        const Point E = line_intersect(F, f.n, f.W, f.U);
        areas.push_back(len * dot(E - F, f.n));
    }
    for (size_t i = 2; i < areas.size(); ++i)
        CHECK(areas[i] - 2 * areas[i - 1] + areas[i - 2] <= 1e-9);

    CHECK_THROWS_AS(
        brute_force_max_wedged_rectangle(triangle_from_angles(60, 60, 1), SideId::a, {100, {}}),
        NotObtuseOnBase);
}

TEST_CASE("inscribed square oracle: bisection matches the closed form") {
    const Triangle ex1 = triangle_from_angles(75, 60, 2);
    const double byformula = inscribed_square_side(height(ex1, SideId::a),
                                                   ex1.side_length(SideId::a));
    const double byoracle = brute_force_inscribed_square(ex1, SideId::a, {1000, {}});
    CHECK_THAT(byoracle, WithinAbs(byformula, 1e-10));
    CHECK_THAT(byoracle, WithinAbs(1.060, 2e-3));

    // h = a case: side a = 2 with height 2
    const Triangle hq = make_triangle({0.7, 2}, {0, 0}, {2, 0});
    CHECK_THAT(brute_force_inscribed_square(hq, SideId::a, {1000, {}}),
               WithinAbs(1.0, 1e-10));

    const Triangle eq = triangle_from_angles(60, 60, 1);
    CHECK_THAT(brute_force_inscribed_square(eq, SideId::a, {1000, {}}),
               WithinAbs(2 * std::sqrt(3.0) - 3, 1e-10));

    CHECK_THROWS_AS(
        brute_force_inscribed_square(triangle_from_angles(120, 30, 1), SideId::c, {100, {}}),
        ObtuseBaseAngle);
}

TEST_CASE("oracle maxima never exceed the closed forms") {
    std::mt19937 rng(402);
    for (int i = 0; i < 100; ++i) {
        const Triangle t = i % 3 == 0   ? testutil::random_acute(rng)
                           : i % 3 == 1 ? testutil::random_right(rng)
                                        : testutil::random_obtuse(rng);
        const auto par = brute_force_max_parallelogram(t, {100, {}});
        CHECK(par.area <= t.area() / 2 * (1 + 1e-9));
        const auto rects = max_rectangles(t);
        for (const auto& s : rects) {
            const auto r = brute_force_max_rectangle(t, s.base, {100, {}});
            CHECK(r.area <= s.area * (1 + 1e-9));
        }
    }
}

TEST_CASE("oracle error shrinks as the grid refines") {
    // odd grid sizes so the exact optimum is never a grid point
    std::mt19937 rng(403);
    std::vector<double> ratios;
    for (int i = 0; i < 20; ++i) {
        const Triangle t = testutil::random_acute(rng);
        const double closed = t.area() / 2;
        const double coarse = closed - brute_force_max_parallelogram(t, {201, {}}).area;
        const double fine = closed - brute_force_max_parallelogram(t, {2001, {}}).area;
        CHECK(coarse >= -1e-9 * closed);
        CHECK(fine >= -1e-9 * closed);
        ratios.push_back(fine / std::max(coarse, 1e-300));
    }
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    CHECK(ratios[ratios.size() / 2] < 1.0);
}
