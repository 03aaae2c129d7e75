#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "oscemu/gates.hpp"

using namespace oscemu;

TEST_CASE("x transition examples") {
    CHECK(apply_x(GateTargets::q1, {0b00, 2}) == GroupState{0b10, 3});
    CHECK(apply_x(GateTargets::q2, {0b10, 3}) == GroupState{0b11, 3});
    CHECK(apply_x(GateTargets::both, {0b01, 1}) == GroupState{0b10, 3});
}

TEST_CASE("cnot examples") {
    CHECK(apply_cnot({0b00, 1}) == GroupState{0b00, 2});
    CHECK(apply_cnot({0b10, 2}) == GroupState{0b11, 2});
}

TEST_CASE("gate tables are involutive permutations") {
    auto states = all_group_states();
    for (GateTargets t : {GateTargets::q1, GateTargets::q2, GateTargets::both}) {
        std::set<std::pair<int, int>> image;
        for (GroupState s : states) {
            GroupState once = apply_x(t, s);
            image.insert({once.vertex, once.surface});
            CHECK(apply_x(t, once) == s);
        }
        CHECK(image.size() == 12);
    }
    std::set<std::pair<int, int>> image;
    for (GroupState s : states) {
        GroupState once = apply_cnot(s);
        image.insert({once.vertex, once.surface});
        CHECK(apply_cnot(once) == s);
    }
    CHECK(image.size() == 12);
}

TEST_CASE("x1 reflection cases") {
    auto cases = x1_reflection_cases();
    CHECK(cases.size() == 6);
    std::set<std::tuple<int, int, int, int>> set;
    for (const ReflectionCase& c : cases)
        set.insert({c.orig_surface, c.final_surface, c.orig_vertex, c.final_vertex});
    CHECK(set.count({1, 1, 0b00, 0b10}) == 1);
    CHECK(set.count({3, 3, 0b11, 0b01}) == 1);
    CHECK(set.size() == 6);
}

TEST_CASE("z phase shifts") {
    CHECK(apply_z(GateTargets::both, 10) == 34);
    CHECK(apply_z(GateTargets::both, 34) == 10);
    CHECK(apply_z(GateTargets::both, 3) == 43);
    CHECK(apply_z(GateTargets::q1, 0) == 136);
    CHECK(apply_z(GateTargets::q1, 140) == 4);
    CHECK_THROWS_AS(apply_z(GateTargets::both, 256), std::domain_error);
    CHECK_THROWS_AS(apply_z(GateTargets::both, -1), std::domain_error);

    for (int r = 0; r < 256; ++r)
        for (GateTargets t : {GateTargets::q1, GateTargets::q2, GateTargets::both}) {
            int out = apply_z(t, r);
            CHECK(out >= 0);
            CHECK(out <= 255);
        }
}

TEST_CASE("y shift table") {
    const auto& table = y_shift_table();
    CHECK(table[0].shift == 85);
    CHECK(table[0].capacitance_uf == doctest::Approx(3.79));
    CHECK(table[15].shift == -85);
    CHECK(table[4].inductance_uh == doctest::Approx(24.1));
    for (int k = 0; k < 8; ++k) CHECK(table[k].shift == -table[15 - k].shift);
}

TEST_CASE("y keys on the imaginary flag bits") {
    // masked nibble 0000 -> first row, 1111 -> last row
    auto [r0, s0] = apply_y(GateTargets::q1, 0b00000000, {0b00, 1});
    auto [r1, s1] = apply_y(GateTargets::q1, 0b01010101, {0b00, 1});
    CHECK(s0 == apply_x(GateTargets::q1, {0b00, 1}));
    CHECK(s1 == s0);
    CHECK(r0 == apply_z(GateTargets::q1, (0 + 85) % 256));
    CHECK(r1 == apply_z(GateTargets::q1, (0b01010101 - 85 + 256) % 256));
}

TEST_CASE("h composition") {
    HComposition h = h_composition();
    CHECK(h.children[0] == "X");
    CHECK(h.children[1] == "Z");
    CHECK(h.scale == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("chief measurement") {
    auto [c0, o0] = measure_chief(0, 100, 1.0);
    CHECK(c0 == doctest::Approx(0.5));
    CHECK(o0 == doctest::Approx(0.5));
    auto [c1, o1] = measure_chief(200, 100, 1.0);
    CHECK(c1 == doctest::Approx(1.0));
    CHECK(o1 == doctest::Approx(0.0));
    auto [c2, o2] = measure_chief(100, 100, 0.64);
    CHECK(c2 * c2 + 3 * o2 * o2 == doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("sigmoid map") {
    CHECK(sigmoid_map(0.0, 0.3) == doctest::Approx(0.5));
    CHECK(sigmoid_map(1e3 / 0.3, 0.3) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sigmoid_map(50.0, 0.2) == doctest::Approx(0.9999546).epsilon(1e-6));
}

TEST_CASE("entangled measurement") {
    auto [c0, c1] = measure_entangled(0.0, 1.0);
    CHECK(c0 == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(c1 == doctest::Approx(1.0 / std::sqrt(2.0)));
    auto [d0, d1] = measure_entangled(50.0, 1.0);
    CHECK(d0 == doctest::Approx(1.0));
    CHECK(d1 == doctest::Approx(0.0));
    for (double vg : {5.0, 20.0, 42.0})
        for (double p : {0.3, 0.8, 1.0}) {
            auto [e0, e1] = measure_entangled(vg, p);
            CHECK(e0 * e0 + e1 * e1 == doctest::Approx(p).epsilon(1e-12));
            CHECK(e0 >= 0);
            CHECK(e1 >= 0);
        }
}

TEST_CASE("edge-aligned measurement") {
    auto [z0, z1, zo] = measure_edge_aligned(1.0, 0.5, 1.0);
    CHECK(z0 == doctest::Approx(0.0));
    CHECK(z1 == doctest::Approx(0.0));
    CHECK(zo == doctest::Approx(std::sqrt(0.5)));
    auto [s0, s1, so] = measure_edge_aligned(0.25, 0.5, 0.9);
    CHECK(s0 == doctest::Approx(s1));
    for (double af : {0.0, 0.4, 0.9})
        for (double gr : {0.0, 0.3, 1.0})
            for (double p : {0.5, 1.0}) {
                auto [c0, c1, co] = measure_edge_aligned(af, gr, p);
                CHECK(c0 * c0 + c1 * c1 + 2 * co * co == doctest::Approx(p).epsilon(1e-12));
            }
}

TEST_CASE("table csv export") {
    std::string csv = gate_tables_csv();
    CHECK(csv.find("operation,operand_vertex,operand_surface,final_vertex,final_surface") == 0);
    CHECK(csv.find("x1,00,2,10,3") != std::string::npos);
    CHECK(csv.find("cnot,10,2,11,2") != std::string::npos);
}
