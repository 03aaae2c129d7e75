#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>

namespace oscemu {

// Two-qubit group-level state: the owning vertex group (pure-state bit
// string as a 2-bit value) and the surface group within it.
struct GroupState {
    int vertex;   // 0..3, bits of the pure state
    int surface;  // 1..3
    bool operator==(const GroupState&) const = default;
};

enum class GateTargets { q1, q2, both };

// All twelve group states in vertex-major order.
std::array<GroupState, 12> all_group_states();

// Table-driven X transition for the selected target set.
GroupState apply_x(GateTargets targets, GroupState s);

// Table-driven CNOT with control q1 and target q2.
GroupState apply_cnot(GroupState s);

// The six transitions of the single-target X where the surface ordering is
// reversed by the application.
struct ReflectionCase {
    int orig_surface;
    int final_surface;
    int orig_vertex;
    int final_vertex;
    bool operator==(const ReflectionCase&) const = default;
};
std::array<ReflectionCase, 6> x1_reflection_cases();

// Z as a phase-unit shift on the 256-range index (one unit = 2 pi / 256).
int apply_z(GateTargets targets, int range);

// One row of the Y-gate shift table; the passive component that would
// realize the shift is carried as inert metadata.
struct YShiftRule {
    int shift;              // signed phase units
    double capacitance_uf;  // 0 when the row is inductive
    double inductance_uh;   // 0 when the row is capacitive
};
const std::array<YShiftRule, 16>& y_shift_table();

// Y composed as i then X then Z: shifts the flag range by the keyed table
// row, applies the X transition, then the Z shift.
std::pair<int, GroupState> apply_y(GateTargets targets, int range, GroupState s);

// H is the scaled parallel composition of X and Z; amplitude-level
// semantics live in the circuit simulator.
struct HComposition {
    std::array<std::string, 2> children;
    double scale;
};
HComposition h_composition();

// Chief-curve measurement: coefficients on the elliptic constraint
// c_chief^2 + 3 c_other^2 = p, with c_chief mapped linearly over the
// curve's accepted index range.
std::pair<double, double> measure_chief(std::int64_t a, std::int64_t a_half_range, double p);

// Sigmoid voltage mapping 1 / (1 + e^(-c v)).
double sigmoid_map(double v_a, double c);

// Strongly entangled (edge) measurement: c0^2 + c1^2 = p with c0 driven by
// the group voltage in [0, 50].
std::pair<double, double> measure_entangled(double v_g, double p);

// Edge-aligned measurement: c0^2 + c1^2 + 2 c_other^2 = p with the shared
// coefficient driven by the radial fraction and the split by g_ratio.
std::tuple<double, double, double> measure_edge_aligned(double a_frac, double g_ratio,
                                                        double p);

// Transition tables as CSV
// (`operation,operand_vertex,operand_surface,final_vertex,final_surface`).
std::string gate_tables_csv();

}  // namespace oscemu
