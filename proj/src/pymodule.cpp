#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oscemu/census.hpp"
#include "oscemu/codec.hpp"
#include "oscemu/decode.hpp"
#include "oscemu/device.hpp"
#include "oscemu/flags.hpp"
#include "oscemu/gates.hpp"
#include "oscemu/simplex.hpp"
#include "oscemu/sim.hpp"

namespace py = pybind11;
using namespace oscemu;

PYBIND11_MODULE(_oscemu, m) {
    m.doc() = "Dual-oscillator quantum-state emulator core";

    py::class_<DeviceSpec>(m, "DeviceSpec")
        .def(py::init<>())
        .def_readwrite("stability_ppm", &DeviceSpec::stability_ppm)
        .def_readwrite("omega_max", &DeviceSpec::omega_max)
        .def_readwrite("cd", &DeviceSpec::cd)
        .def_readwrite("name", &DeviceSpec::name);
    m.def("builtin_profile", &builtin_profile);
    m.def("resolve_profile", &resolve_profile);
    m.def("d_omega", &d_omega);
    m.def("scaling_coefficient", &scaling_coefficient);
    m.def("naive_component_count", &naive_component_count);
    m.def("precision_percent", &precision_percent);
    m.def("per_curve_precision", &per_curve_precision);

    py::class_<EncodeResult>(m, "EncodeResult")
        .def_readonly("phi", &EncodeResult::phi)
        .def_readonly("theta", &EncodeResult::theta)
        .def("valid", &EncodeResult::valid);
    m.def("encode", &encode, py::arg("a"), py::arg("b"), py::arg("g"));
    m.def("geometric_phi_oracle", &geometric_phi_oracle);
    m.def("decode_a", &decode_a, py::arg("phi"), py::arg("g"), py::arg("a_max_hint"));
    m.def("decode_b", &decode_b);

    py::class_<CurveCount>(m, "CurveCount")
        .def_readonly("count", &CurveCount::count)
        .def_readonly("value", &CurveCount::value)
        .def_readonly("phi", &CurveCount::phi)
        .def_readonly("d_omega", &CurveCount::d_omega)
        .def_readonly("a", &CurveCount::a);
    m.def("count_states_on_curve", &count_states_on_curve);

    py::class_<CensusReport>(m, "CensusReport")
        .def_readonly("total_states", &CensusReport::total_states)
        .def_readonly("terminal_g", &CensusReport::terminal_g)
        .def_readonly("terminal_phi", &CensusReport::terminal_phi)
        .def_readonly("terminal_omega", &CensusReport::terminal_omega)
        .def_readonly("terminal_gap", &CensusReport::terminal_gap)
        .def_readonly("curves_counted", &CensusReport::curves_counted);
    m.def("census_unscaled", &census_unscaled, py::arg("spec"), py::arg("g0") = 0.0,
          py::arg("dg") = 0.01, py::arg("keep_rows") = false);
    m.def("census_scaled", &census_scaled, py::arg("spec"), py::arg("g0") = 1.0,
          py::arg("dg") = 1e-4, py::arg("keep_rows") = false);
    m.def("summary_text", &summary_text);

    py::class_<FlagPair>(m, "FlagPair")
        .def(py::init<>())
        .def_readwrite("imaginary", &FlagPair::imaginary)
        .def_readwrite("negative", &FlagPair::negative)
        .def("__eq__", [](const FlagPair& a, const FlagPair& b) { return a == b; });
    m.def("mul_i", &mul_i);
    m.def("negate", &negate);
    m.def("summarize", &summarize);
    m.def("successive_gate_count", &successive_gate_count);

    py::class_<GroupState>(m, "GroupState")
        .def(py::init<int, int>())
        .def_readwrite("vertex", &GroupState::vertex)
        .def_readwrite("surface", &GroupState::surface)
        .def("__eq__", [](const GroupState& a, const GroupState& b) { return a == b; });
    py::enum_<GateTargets>(m, "GateTargets")
        .value("q1", GateTargets::q1)
        .value("q2", GateTargets::q2)
        .value("both", GateTargets::both);
    m.def("apply_x", &apply_x);
    m.def("apply_cnot", &apply_cnot);
    m.def("apply_z", &apply_z);

    m.def("generate_perm_sop", [] {
        SopTables t = generate_perm_sop();
        std::vector<std::vector<std::string>> out(t.expressions.begin(),
                                                  t.expressions.end());
        return out;
    });
    m.def("minimize_perm_sop", [] {
        MinimizeResult r = minimize(generate_perm_sop());
        std::vector<std::vector<std::string>> exprs(r.tables.expressions.begin(),
                                                    r.tables.expressions.end());
        return py::make_tuple(exprs, r.removed, r.pass_removals);
    });
    m.def("minimize_cancel_sop", [] {
        MinimizeResult r = minimize(generate_cancel_sop());
        std::vector<std::vector<std::string>> exprs(r.tables.expressions.begin(),
                                                    r.tables.expressions.end());
        return py::make_tuple(exprs, r.removed, r.pass_removals);
    });

    py::class_<CurveLayout>(m, "CurveLayout")
        .def_readonly("surfaces_per_vertex", &CurveLayout::surfaces_per_vertex)
        .def_readonly("curves_per_vertex_group", &CurveLayout::curves_per_vertex_group)
        .def_readonly("curves_per_surface_group", &CurveLayout::curves_per_surface_group);
    m.def("build_layout", &build_layout, py::arg("qubits"), py::arg("curves_total"),
          py::arg("dg") = 1e-4, py::arg("g_max") = 24.0);

    py::class_<PureState>(m, "PureState")
        .def(py::init([](std::complex<double> amp, std::string val) {
            return PureState{amp, std::move(val)};
        }))
        .def_readwrite("amp", &PureState::amp)
        .def_readwrite("val", &PureState::val);
    py::class_<Ensemble>(m, "Ensemble")
        .def(py::init<int>())
        .def(py::init<const std::vector<PureState>&, int>())
        .def("x", &Ensemble::x, py::return_value_policy::reference_internal)
        .def("y", &Ensemble::y, py::return_value_policy::reference_internal)
        .def("z", &Ensemble::z, py::return_value_policy::reference_internal)
        .def("h", &Ensemble::h, py::return_value_policy::reference_internal)
        .def("cx", &Ensemble::cx, py::return_value_policy::reference_internal)
        .def("m", py::overload_cast<int>(&Ensemble::m))
        .def("m", py::overload_cast<int, const std::string&>(&Ensemble::m))
        .def("seed", &Ensemble::seed)
        .def("norm_squared", &Ensemble::norm_squared)
        .def("num_qubits", &Ensemble::num_qubits)
        .def("states", &Ensemble::states)
        .def("get_density_matrix",
             [](const Ensemble& e, int q) {
                 DensityMatrix rho = e.get_density_matrix(q);
                 return std::vector<std::vector<std::complex<double>>>{
                     {rho[0][0], rho[0][1]}, {rho[1][0], rho[1][1]}};
             })
        .def("get_components", &Ensemble::get_components);
}
