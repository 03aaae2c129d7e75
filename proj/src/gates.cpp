#include "oscemu/gates.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace oscemu {

namespace {

struct TransitionRow {
    int vertex_in, surface_in, vertex_out, surface_out;
};

// Transition tables, one row per (vertex, surface) operand.
constexpr std::array<TransitionRow, 12> kX1 = {{
    {0, 1, 2, 1}, {0, 2, 2, 3}, {0, 3, 2, 2},
    {1, 1, 3, 2}, {1, 2, 3, 1}, {1, 3, 3, 3},
    {2, 1, 0, 1}, {2, 2, 0, 3}, {2, 3, 0, 2},
    {3, 1, 1, 2}, {3, 2, 1, 1}, {3, 3, 1, 3},
}};

constexpr std::array<TransitionRow, 12> kX2 = {{
    {0, 1, 1, 1}, {0, 2, 1, 2}, {0, 3, 1, 3},
    {1, 1, 0, 1}, {1, 2, 0, 2}, {1, 3, 0, 3},
    {2, 1, 3, 1}, {2, 2, 3, 2}, {2, 3, 3, 3},
    {3, 1, 2, 1}, {3, 2, 2, 2}, {3, 3, 2, 3},
}};

constexpr std::array<TransitionRow, 12> kX12 = {{
    {0, 1, 3, 3}, {0, 2, 3, 2}, {0, 3, 3, 1},
    {1, 1, 2, 3}, {1, 2, 2, 2}, {1, 3, 2, 1},
    {2, 1, 1, 3}, {2, 2, 1, 2}, {2, 3, 1, 1},
    {3, 1, 0, 3}, {3, 2, 0, 2}, {3, 3, 0, 1},
}};

constexpr std::array<TransitionRow, 12> kCnot = {{
    {0, 1, 0, 2}, {0, 2, 0, 1}, {0, 3, 0, 3},
    {1, 1, 1, 2}, {1, 2, 1, 1}, {1, 3, 1, 3},
    {2, 1, 3, 1}, {2, 2, 3, 2}, {2, 3, 3, 3},
    {3, 1, 2, 1}, {3, 2, 2, 2}, {3, 3, 2, 3},
}};

GroupState lookup(const std::array<TransitionRow, 12>& table, GroupState s) {
    if (s.vertex < 0 || s.vertex > 3 || s.surface < 1 || s.surface > 3)
        throw std::domain_error("gate table lookup: invalid group state");
    for (const TransitionRow& row : table)
        if (row.vertex_in == s.vertex && row.surface_in == s.surface)
            return {row.vertex_out, row.surface_out};
    throw std::logic_error("gate table lookup: table not total");
}

// Swaps the two qubits' flag-bit fields within an 8-bit range index
// (pure states 01 and 10 exchange their pairs).
int swap_qubit_fields(int range) {
    return (range & 0b11000011) | ((range & 0b00110000) >> 2) | ((range & 0b00001100) << 2);
}

int z_both(int r) {
    if (r < 7) return r + 40;
    if (r < 32) return r + 24;
    if (r < 40) return r - 24;
    return r - 40;
}

int z_q1(int r) {
    if (r < 8) return r + 136;
    if (r < 128) return r + 120;
    if (r < 136) return r - 120;
    return r - 136;
}

}  // namespace

std::array<GroupState, 12> all_group_states() {
    std::array<GroupState, 12> states;
    int i = 0;
    for (int v = 0; v < 4; ++v)
        for (int s = 1; s <= 3; ++s) states[i++] = {v, s};
    return states;
}

GroupState apply_x(GateTargets targets, GroupState s) {
    switch (targets) {
        case GateTargets::q1: return lookup(kX1, s);
        case GateTargets::q2: return lookup(kX2, s);
        case GateTargets::both: return lookup(kX12, s);
    }
    throw std::domain_error("apply_x: invalid targets");
}

GroupState apply_cnot(GroupState s) {
    return lookup(kCnot, s);
}

std::array<ReflectionCase, 6> x1_reflection_cases() {
    return {{
        {1, 1, 0b00, 0b10},
        {1, 1, 0b10, 0b00},
        {1, 2, 0b11, 0b01},
        {2, 3, 0b00, 0b10},
        {3, 3, 0b01, 0b11},
        {3, 3, 0b11, 0b01},
    }};
}

int apply_z(GateTargets targets, int range) {
    if (range < 0 || range > 255) throw std::domain_error("apply_z: range out of bounds");
    int shifted;
    switch (targets) {
        case GateTargets::both: shifted = z_both(range); break;
        case GateTargets::q1: shifted = z_q1(range); break;
        case GateTargets::q2:
            shifted = swap_qubit_fields(z_q1(swap_qubit_fields(range)));
            break;
        default: throw std::domain_error("apply_z: invalid targets");
    }
    return ((shifted % 256) + 256) % 256;
}

const std::array<YShiftRule, 16>& y_shift_table() {
    static const std::array<YShiftRule, 16> table = {{
        {85, 3.79, 0}, {83, 3.36, 0}, {77, 2.21, 0}, {75, 1.85, 0},
        {53, 0, 24.1}, {51, 0, 20.2}, {45, 0, 13.3}, {43, 0, 11.8},
        {-43, 3.79, 0}, {-45, 3.36, 0}, {-51, 2.21, 0}, {-53, 1.85, 0},
        {-75, 0, 24.1}, {-77, 0, 20.2}, {-83, 0, 13.3}, {-85, 0, 11.8},
    }};
    return table;
}

std::pair<int, GroupState> apply_y(GateTargets targets, int range, GroupState s) {
    if (range < 0 || range > 255) throw std::domain_error("apply_y: range out of bounds");
    // Row selection keys on the imaginary flag bits of the range index.
    int key = ((range >> 6) & 1) << 3 | ((range >> 4) & 1) << 2 | ((range >> 2) & 1) << 1 |
              (range & 1);
    int shifted = (((range + y_shift_table()[key].shift) % 256) + 256) % 256;
    GroupState after_x = apply_x(targets, s);
    return {apply_z(targets, shifted), after_x};
}

HComposition h_composition() {
    return {{"X", "Z"}, 1.0 / std::sqrt(2.0)};
}

std::pair<double, double> measure_chief(std::int64_t a, std::int64_t a_half_range, double p) {
    if (a_half_range < 1) throw std::domain_error("measure_chief: empty range");
    if (a < 0 || a > 2 * a_half_range) throw std::domain_error("measure_chief: a out of range");
    if (p <= 0 || p > 1) throw std::domain_error("measure_chief: p out of (0, 1]");
    double c_chief = 0.5 + (std::sqrt(p) - 0.5) * (double(a) / double(2 * a_half_range));
    if (c_chief * c_chief > p)
        throw std::domain_error("measure_chief: chief coefficient exceeds the constraint");
    double c_other = std::sqrt((p - c_chief * c_chief) / 3.0);
    return {c_chief, c_other};
}

double sigmoid_map(double v_a, double c) {
    return 1.0 / (1.0 + std::exp(-c * v_a));
}

std::pair<double, double> measure_entangled(double v_g, double p) {
    if (v_g < 0 || v_g > 50) throw std::domain_error("measure_entangled: v_g out of [0, 50]");
    if (p <= 0 || p > 1) throw std::domain_error("measure_entangled: p out of (0, 1]");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    double c0 = ((1.0 - inv_sqrt2) * v_g / 50.0 + inv_sqrt2) * std::sqrt(p);
    double rest = p - c0 * c0;
    double c1 = std::sqrt(std::max(0.0, rest));
    return {c0, c1};
}

std::tuple<double, double, double> measure_edge_aligned(double a_frac, double g_ratio,
                                                        double p) {
    if (a_frac < 0 || a_frac > 1)
        throw std::domain_error("measure_edge_aligned: a_frac out of [0, 1]");
    if (g_ratio < 0 || g_ratio > 1)
        throw std::domain_error("measure_edge_aligned: g_ratio out of [0, 1]");
    if (p <= 0 || p > 1) throw std::domain_error("measure_edge_aligned: p out of (0, 1]");
    double c_other = (0.5 + 0.5 * a_frac) * std::sqrt(p / 2.0);
    double residual = std::max(0.0, p - 2.0 * c_other * c_other);
    double c0 = std::sqrt(residual * g_ratio);
    double c1 = std::sqrt(residual * (1.0 - g_ratio));
    return {c0, c1, c_other};
}

std::string gate_tables_csv() {
    std::ostringstream out;
    out << "operation,operand_vertex,operand_surface,final_vertex,final_surface\n";
    auto vertex_string = [](int v) {
        return std::string() + char('0' + ((v >> 1) & 1)) + char('0' + (v & 1));
    };
    auto dump = [&](const char* name, const std::array<TransitionRow, 12>& table) {
        for (const TransitionRow& r : table)
            out << name << ',' << vertex_string(r.vertex_in) << ',' << r.surface_in << ','
                << vertex_string(r.vertex_out) << ',' << r.surface_out << '\n';
    };
    dump("x1", kX1);
    dump("x2", kX2);
    dump("x12", kX12);
    dump("cnot", kCnot);
    return out.str();
}

}  // namespace oscemu
