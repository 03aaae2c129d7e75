#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oscemu {

enum class CurveClass { primary, secondary, tertiary };

// Position of one maintained state in the curve partition.
struct SimplexCoords {
    int qubits;
    double g;
    std::int64_t a;
    std::string vertex_group;  // pure-state bit string of the owning vertex
    int surface_group;         // 1-based within the vertex group
    std::int64_t offset;       // curve offset within the surface group
};

struct ChiefCurve {
    double g;
    std::string state;
};

// Partition of the g range into chief curves, vertex groups and surface
// groups for a Q-qubit system.
struct CurveLayout {
    int qubits;
    std::int64_t curves_total;
    double dg;
    double g_max;
    std::vector<ChiefCurve> chief_curves;
    int surfaces_per_vertex;
    std::int64_t curves_per_vertex_group;
    std::int64_t curves_per_surface_group;
};

// Strength of the out-of-simplex observable for a two-qubit system given
// the five signed edge distances from the maximally mixed state.
double hdo_strength_2q(const std::array<double, 5>& deltas);

// Probability of measuring a state at distance delta given spread sigma;
// clamped to [0, 1].
double p_measure(double sigma, double delta);

// Builds the curve partition. Chiefs are spaced evenly across [dg, g_max]
// and assigned to pure states in binary order, wrapping back to |0...0>.
CurveLayout build_layout(int qubits, std::int64_t curves_total, double dg = 1e-4,
                         double g_max = 24.0);

// Maps a curve value to its vertex group, surface group and offset. A g
// exactly on a chief belongs to that chief's band at offset 0; surface
// groups own half-open intervals [start, end).
SimplexCoords locate(double g, const CurveLayout& layout);

// Curve role by radial index: a mod 3 of 0, 1, 2 selects the primary,
// secondary or tertiary curve respectively.
CurveClass curve_class(std::int64_t a);

// Count of measurement-termination lines per surface group.
std::int64_t termination_lines(std::int64_t curves_per_surface_group = 20000,
                               std::int64_t points_per_line = 50);

// CSV dumps: `state,chief_g` and `vertex,surface,g_start,g_end`.
std::string layout_csv(const CurveLayout& layout);

}  // namespace oscemu
