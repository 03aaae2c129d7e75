#include "oscemu/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oscemu/format.hpp"

namespace oscemu {

double hdo_strength_2q(const std::array<double, 5>& d) {
    return 1.0 - (d[0] + 0.5 * d[1] - 0.5 * d[2] + 0.5 * d[3] - 0.5 * d[4]);
}

double p_measure(double sigma, double delta) {
    if (sigma <= 0) throw std::domain_error("p_measure: sigma must be positive");
    if (delta < 0) throw std::domain_error("p_measure: delta must be non-negative");
    return std::clamp((sigma - delta) / sigma, 0.0, 1.0);
}

namespace {

std::string state_string(int value, int qubits) {
    std::string s(qubits, '0');
    for (int i = 0; i < qubits; ++i)
        if (value & (1 << (qubits - 1 - i))) s[i] = '1';
    return s;
}

}  // namespace

CurveLayout build_layout(int qubits, std::int64_t curves_total, double dg, double g_max) {
    if (qubits < 1) throw std::domain_error("build_layout: qubit count must be >= 1");
    if (dg <= 0 || g_max <= dg) throw std::domain_error("build_layout: bad g range");
    const std::int64_t pure_states = std::int64_t(1) << qubits;
    if (curves_total < pure_states)
        throw std::runtime_error("build_layout: not enough curves for the pure states");

    CurveLayout layout;
    layout.qubits = qubits;
    layout.curves_total = curves_total;
    layout.dg = dg;
    layout.g_max = g_max;

    // One chief per pure state; the cycle wraps back to |0...0> except in
    // the degenerate one-qubit case where the simplex is a segment.
    const int chiefs = qubits >= 2 ? int(pure_states) + 1 : 2;
    const double spacing = g_max / double(chiefs - 1);
    for (int k = 0; k < chiefs; ++k) {
        double pos = k == 0 ? dg : k * spacing;
        layout.chief_curves.push_back({pos, state_string(int(k % pure_states), qubits)});
    }

    layout.surfaces_per_vertex = int(pure_states) - 1;
    const std::int64_t bands = chiefs - 1;
    layout.curves_per_vertex_group = curves_total / bands;
    layout.curves_per_surface_group =
        layout.curves_per_vertex_group / layout.surfaces_per_vertex;
    if (layout.curves_per_surface_group < 1)
        throw std::runtime_error("build_layout: not enough curves per surface group");
    return layout;
}

SimplexCoords locate(double g, const CurveLayout& layout) {
    const auto& chiefs = layout.chief_curves;
    if (g < chiefs.front().g || g > chiefs.back().g)
        throw std::domain_error("locate: g outside layout range");

    for (const ChiefCurve& c : chiefs)
        if (g == c.g) return {layout.qubits, g, 0, c.state, 1, 0};

    std::size_t band = 0;
    while (band + 2 < chiefs.size() && g >= chiefs[band + 1].g) ++band;
    const double start = chiefs[band].g;
    const double width = chiefs[band + 1].g - start;
    const double surface_width = width / layout.surfaces_per_vertex;
    int surface = std::min(int((g - start) / surface_width), layout.surfaces_per_vertex - 1);
    const double surface_start = start + surface * surface_width;
    const double curve_spacing = surface_width / double(layout.curves_per_surface_group);
    std::int64_t offset = std::int64_t((g - surface_start) / curve_spacing);
    offset = std::min(offset, layout.curves_per_surface_group - 1);
    return {layout.qubits, g, 0, chiefs[band].state, surface + 1, offset};
}

CurveClass curve_class(std::int64_t a) {
    if (a < 0) throw std::domain_error("curve_class: negative index");
    switch (a % 3) {
        case 0: return CurveClass::primary;
        case 1: return CurveClass::secondary;
        default: return CurveClass::tertiary;
    }
}

std::int64_t termination_lines(std::int64_t curves_per_surface_group,
                               std::int64_t points_per_line) {
    if (curves_per_surface_group <= 0 || points_per_line <= 0)
        throw std::domain_error("termination_lines: counts must be positive");
    return curves_per_surface_group / points_per_line;
}

std::string layout_csv(const CurveLayout& layout) {
    std::ostringstream out;
    out << "state,chief_g\n";
    for (const ChiefCurve& c : layout.chief_curves)
        out << c.state << ',' << repr_double(c.g) << '\n';
    out << "vertex,surface,g_start,g_end\n";
    const auto& chiefs = layout.chief_curves;
    for (std::size_t band = 0; band + 1 < chiefs.size(); ++band) {
        const double start = chiefs[band].g;
        const double width = chiefs[band + 1].g - start;
        const double surface_width = width / layout.surfaces_per_vertex;
        for (int s = 0; s < layout.surfaces_per_vertex; ++s)
            out << chiefs[band].state << ',' << (s + 1) << ','
                << repr_double(start + s * surface_width) << ','
                << repr_double(start + (s + 1) * surface_width) << '\n';
    }
    return out.str();
}

}  // namespace oscemu
