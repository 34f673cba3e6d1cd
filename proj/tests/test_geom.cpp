#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "trimax/geom.hpp"

using namespace trimax;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
Triangle example1() { return triangle_from_angles(75, 60, 2); }
}  // namespace

TEST_CASE("make_triangle validates and classifies plain inputs") {
    const Triangle right = make_triangle({0, 0}, {4, 0}, {0, 3});
    const TriangleClass rc = classify(right);
    CHECK(rc.kind == ClassKind::Right);
    CHECK(rc.vertex == VertexId::A);

    CHECK_THROWS_AS(make_triangle({0, 0}, {1, 0}, {2, 0}), DegenerateTriangle);

    // apex inside the semicircle of radius 1/2 about (-0.5, 0) => obtuse there
    const Triangle obtuse = make_triangle({0, 0}, {-1, 0}, {-0.5, 0.4068});
    const TriangleClass oc = classify(obtuse);
    CHECK(oc.kind == ClassKind::Obtuse);
    CHECK(oc.vertex == VertexId::C);
}

TEST_CASE("make_triangle degeneracy threshold is scale-relative") {
    CHECK_THROWS_AS(make_triangle({0, 0}, {1, 0}, {0.5, 1e-14}), DegenerateTriangle);
    CHECK_THROWS_AS(make_triangle({0, 0}, {1000, 0}, {500, 1e-11}), DegenerateTriangle);
    CHECK_NOTHROW(make_triangle({0, 0}, {1, 0}, {0.5, 1e-5}));
    CHECK_NOTHROW(make_triangle({0, 0}, {1000, 0}, {500, 1e-2}));
    CHECK_THROWS_AS(make_triangle({0, 0}, {1, 0}, {0.5, std::nan("")}), DegenerateTriangle);
}

TEST_CASE("triangle_from_angles reproduces the 75-60-45 construction") {
    const Triangle t = example1();
    CHECK_THAT(t.side_length(SideId::a), WithinRel(1 + std::sqrt(3.0), 1e-12));
    CHECK_THAT(t.side_length(SideId::b), WithinRel(std::sqrt(6.0), 1e-12));
    CHECK_THAT(t.side_length(SideId::c), WithinRel(2.0, 1e-15));
    CHECK(classify(t).kind == ClassKind::Acute);
}

TEST_CASE("triangle_from_angles handles equilateral and right isosceles") {
    const Triangle eq = triangle_from_angles(60, 60, 1);
    for (SideId s : all_sides) CHECK_THAT(eq.side_length(s), WithinRel(1.0, 1e-12));

    const Triangle iso = triangle_from_angles(45, 45, 1);
    const TriangleClass cls = classify(iso);
    CHECK(cls.kind == ClassKind::Right);
    CHECK(cls.vertex == VertexId::C);  // right angle opposite the base
    CHECK_THAT(angle_at(iso, VertexId::C), WithinAbs(std::numbers::pi / 2, 1e-12));
}

TEST_CASE("triangle_from_angles rejects bad input") {
    CHECK_THROWS_AS(triangle_from_angles(0, 60, 1), InvalidAngles);
    CHECK_THROWS_AS(triangle_from_angles(120, 60, 1), InvalidAngles);
    CHECK_THROWS_AS(triangle_from_angles(-5, 60, 1), InvalidAngles);
    CHECK_THROWS_AS(triangle_from_angles(60, 60, 0), NonPositiveInput);
}

TEST_CASE("heights match the worked example") {
    const Triangle t = example1();
    CHECK_THAT(height(t, SideId::a), WithinRel(std::sqrt(3.0), 1e-12));
    CHECK_THAT(height(t, SideId::c), WithinAbs(2.3660254037844385, 1e-9));

    const Triangle eq = triangle_from_angles(60, 60, 2);
    for (SideId s : all_sides) CHECK_THAT(height(eq, s), WithinRel(std::sqrt(3.0), 1e-12));
}

TEST_CASE("angle_at basics") {
    const Triangle eq = triangle_from_angles(60, 60, 1);
    for (VertexId v : all_vertices)
        CHECK_THAT(angle_at(eq, v), WithinAbs(std::numbers::pi / 3, 1e-12));

    const Triangle iso = triangle_from_angles(45, 45, 2);
    CHECK_THAT(angle_at(iso, VertexId::C), WithinAbs(std::numbers::pi / 2, 1e-12));

    // Calabi-shaped triangle: base angles 39.132..., apex 101.736...
    const Triangle cal = triangle_from_angles(39.132, 39.132, 1.5513875);
    CHECK_THAT(angle_at(cal, VertexId::C), WithinAbs(deg_to_rad(101.736), 1e-5));
    CHECK(classify(cal).kind == ClassKind::Obtuse);
    CHECK(classify(cal).vertex == VertexId::C);
}

TEST_CASE("classify right triangle by Pythagorean legs") {
    const Triangle t = make_triangle({0, 0}, {3, 0}, {3, 4});
    CHECK(classify(t).kind == ClassKind::Right);
    CHECK(classify(t).vertex == VertexId::B);
}

TEST_CASE("side-height products all equal twice the area") {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        const Triangle t = i % 2 ? testutil::random_acute(rng) : testutil::random_obtuse(rng);
        const double ref = 2 * t.area();
        for (SideId s : all_sides) {
            CHECK_THAT(t.side_length(s) * height(t, s), WithinRel(ref, 1e-9));
        }
    }
}

TEST_CASE("classification is invariant under rigid motion and scaling") {
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        Triangle t = i % 3 == 0   ? testutil::random_acute(rng)
                     : i % 3 == 1 ? testutil::random_right(rng)
                                  : testutil::random_obtuse(rng);
        const TriangleClass before = classify(t);
        const Triangle moved = testutil::transformed(t, rng);
        const TriangleClass after = classify(moved);
        CHECK(before.kind == after.kind);
        if (before.kind != ClassKind::Acute) CHECK(before.vertex == after.vertex);
    }
}

TEST_CASE("angles round-trip through triangle_from_angles") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> u(10.0, 80.0);
    for (int i = 0; i < 200; ++i) {
        const double alpha = u(rng), beta = u(rng);
        const Triangle t = triangle_from_angles(alpha, beta, 1 + i % 5);
        CHECK_THAT(angle_at(t, VertexId::A), WithinAbs(deg_to_rad(alpha), 1e-9));
        CHECK_THAT(angle_at(t, VertexId::B), WithinAbs(deg_to_rad(beta), 1e-9));
        CHECK_THAT(angle_at(t, VertexId::A) + angle_at(t, VertexId::B) +
                       angle_at(t, VertexId::C),
                   WithinAbs(std::numbers::pi, 1e-9));
    }
}

TEST_CASE("clockwise input behaves like counterclockwise") {
    const Triangle ccw = make_triangle({0, 0}, {4, 0}, {1, 3});
    const Triangle cw = make_triangle({0, 0}, {1, 3}, {4, 0});  // same shape, B/C swapped
    CHECK(ccw.ccw());
    CHECK_FALSE(cw.ccw());
    CHECK_THAT(cw.area(), WithinRel(ccw.area(), 1e-15));
    CHECK(classify(cw).kind == classify(ccw).kind);
}
