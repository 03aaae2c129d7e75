#include <doctest.h>

#include <stdexcept>

#include "oscemu/simplex.hpp"

using namespace oscemu;

TEST_CASE("hdo strength") {
    CHECK(hdo_strength_2q({0, 0, 0, 0, 0}) == doctest::Approx(1.0));
    CHECK(hdo_strength_2q({1, 0, 0, 0, 0}) == doctest::Approx(0.0));
    CHECK(hdo_strength_2q({0, 0, 2, 0, 0}) == doctest::Approx(2.0));
}

TEST_CASE("measurement probability") {
    CHECK(p_measure(2.0, 2.0) == doctest::Approx(0.0));
    CHECK(p_measure(2.0, 0.0) == doctest::Approx(1.0));
    CHECK(p_measure(2.0, 1.0) == doctest::Approx(0.5));
    CHECK(p_measure(1.0, 5.0) == 0.0);  // clamped
    CHECK_THROWS_AS(p_measure(0.0, 1.0), std::domain_error);
}

TEST_CASE("default two-qubit layout") {
    CurveLayout layout = build_layout(2, 240000);
    REQUIRE(layout.chief_curves.size() == 5);
    CHECK(layout.chief_curves[0].g == doctest::Approx(1e-4));
    CHECK(layout.chief_curves[0].state == "00");
    CHECK(layout.chief_curves[1].g == doctest::Approx(6.0));
    CHECK(layout.chief_curves[1].state == "01");
    CHECK(layout.chief_curves[2].g == doctest::Approx(12.0));
    CHECK(layout.chief_curves[2].state == "10");
    CHECK(layout.chief_curves[3].g == doctest::Approx(18.0));
    CHECK(layout.chief_curves[3].state == "11");
    CHECK(layout.chief_curves[4].g == doctest::Approx(24.0));
    CHECK(layout.chief_curves[4].state == "00");
    CHECK(layout.surfaces_per_vertex == 3);
    CHECK(layout.curves_per_vertex_group == 60000);
    CHECK(layout.curves_per_surface_group == 20000);
}

TEST_CASE("degenerate and small layouts") {
    CurveLayout q1 = build_layout(1, 100);
    CHECK(q1.chief_curves.size() == 2);
    CHECK(q1.surfaces_per_vertex == 1);

    CurveLayout tiny = build_layout(2, 12);
    CHECK(tiny.curves_per_surface_group == 1);

    CHECK_THROWS(build_layout(2, 3));
}

TEST_CASE("locate") {
    CurveLayout layout = build_layout(2, 240000);

    SimplexCoords chief = locate(6.0, layout);
    CHECK(chief.vertex_group == "01");
    CHECK(chief.surface_group == 1);
    CHECK(chief.offset == 0);

    SimplexCoords mid = locate(6.0 + 20000 * 1e-4 * 1.5, layout);
    CHECK(mid.vertex_group == "01");
    CHECK(mid.surface_group == 2);

    SimplexCoords high = locate(12.0 - 1e-4 / 2, layout);
    CHECK(high.vertex_group == "01");
    CHECK(high.surface_group == 3);
    CHECK(high.offset == layout.curves_per_surface_group - 1);

    CHECK_THROWS_AS(locate(25.0, layout), std::domain_error);

    SUBCASE("total and consistent over a sample grid") {
        double prev_g = -1;
        for (double g = 0.001; g < 24.0; g += 0.37) {
            SimplexCoords c = locate(g, layout);
            CHECK(c.surface_group >= 1);
            CHECK(c.surface_group <= 3);
            CHECK(c.offset >= 0);
            CHECK(c.offset < layout.curves_per_surface_group);
            prev_g = g;
        }
        CHECK(prev_g > 0);
    }
}

TEST_CASE("curve classes") {
    CHECK(curve_class(0) == CurveClass::primary);
    CHECK(curve_class(4) == CurveClass::secondary);
    CHECK(curve_class(5) == CurveClass::tertiary);
    for (std::int64_t a = 0; a < 30; ++a) CHECK(curve_class(a) == curve_class(a + 3));
}

TEST_CASE("termination lines") {
    CHECK(termination_lines(20000, 50) == 400);
    CHECK(termination_lines(50, 50) == 1);
    CHECK(termination_lines(100, 25) == 4);
}

TEST_CASE("layout csv shape") {
    CurveLayout layout = build_layout(2, 240000);
    std::string csv = layout_csv(layout);
    CHECK(csv.find("state,chief_g") == 0);
    CHECK(csv.find("vertex,surface,g_start,g_end") != std::string::npos);
    CHECK(csv.find("01,2,") != std::string::npos);
}
