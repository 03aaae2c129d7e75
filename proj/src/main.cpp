#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oscemu/census.hpp"
#include "oscemu/codec.hpp"
#include "oscemu/decode.hpp"
#include "oscemu/device.hpp"
#include "oscemu/format.hpp"
#include "oscemu/gates.hpp"
#include "oscemu/sim.hpp"
#include "oscemu/simplex.hpp"

namespace {

using namespace oscemu;

int cmd_census(const std::string& device, bool scaled, double dg, double g0, bool g0_set,
               const std::string& out) {
    DeviceSpec spec = resolve_profile(device);
    CensusReport report;
    bool keep_rows = !out.empty();
    if (scaled) {
        report = census_scaled(spec, g0_set ? g0 : 1.0, dg, keep_rows);
    } else {
        report = census_unscaled(spec, g0_set ? g0 : 0.0, dg, keep_rows);
    }
    if (!out.empty()) emit_csv(report, out);
    std::cout << summary_text(report, spec);
    return 0;
}

int cmd_encode(std::int64_t a, double b, double g, const std::string& device, bool scaled) {
    EncodeResult r = encode(a, b, g);
    if (!r.valid()) {
        std::cerr << "unencodable: a=" << a << " g=" << repr_double(g) << "\n";
        return 1;
    }
    std::cout << "phi: " << repr_double(r.phi) << '\n';
    std::cout << "theta: " << repr_double(r.theta) << '\n';
    if (scaled) {
        DeviceSpec spec = resolve_profile(device);
        std::cout << "omega: " << repr_double(r.phi * spec.cd) << '\n';
    }
    return 0;
}

int cmd_decode(double phi, double g, std::int64_t a_max, double theta, bool have_theta) {
    if (have_theta) {
        std::cout << "b: " << repr_double(decode_b(theta)) << '\n';
        return 0;
    }
    std::int64_t a = decode_a(phi, g, a_max);
    std::cout << "a: " << a << '\n';
    return 0;
}

int cmd_gates(const std::string& out) {
    std::string csv = gate_tables_csv();
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot open " << out << "\n";
            return 1;
        }
        f << csv;
    }
    return 0;
}

int cmd_synth(const std::string& which, const std::string& out) {
    SopTables raw = which == "perm" ? generate_perm_sop() : generate_cancel_sop();
    MinimizeResult min = minimize(raw);
    std::ostringstream text;
    text << "removed " << min.removed << " terms\n";
    const char prefix = which == "perm" ? 'P' : 'C';
    for (int bit = 0; bit < 25; ++bit) {
        if (min.tables.expressions[bit].empty()) continue;
        text << prefix << "_" << bit << " ="
             << render_expression(min.tables.expressions[bit]) << '\n';
    }
    if (out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot open " << out << "\n";
            return 1;
        }
        f << text.str();
        std::cout << "removed " << min.removed << " terms\n";
    }
    return 0;
}

int cmd_sim(const std::string& path, std::uint64_t seed, int trials) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "cannot open circuit file " << path << "\n";
        return 1;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    Circuit circuit = parse_circuit(buf.str());

    if (trials <= 1) {
        Ensemble e = run_circuit(circuit, seed);
        std::cout << "classical bits:\n";
        for (const auto& [name, bit] : e.classical_bits())
            std::cout << "  " << name << " = " << bit << '\n';
        std::cout << "states:\n";
        for (const PureState& s : e.states())
            std::cout << "  |" << s.val << "> amp (" << repr_double(s.amp.real()) << ", "
                      << repr_double(s.amp.imag()) << ")\n";
        auto report = e.report_max_requirements();
        std::cout << "peak states: " << report.peak_states << '\n';
        std::cout << "flag bits: " << report.flag_bits << '\n';
        return 0;
    }

    std::map<std::string, std::int64_t> outcome_counts;
    for (int t = 0; t < trials; ++t) {
        Ensemble e = run_circuit(circuit, seed + std::uint64_t(t));
        std::string key;
        for (const auto& [name, bit] : e.classical_bits())
            key += name + "=" + std::to_string(bit) + " ";
        outcome_counts[key] += 1;
    }
    std::cout << "trials: " << trials << '\n';
    for (const auto& [key, count] : outcome_counts)
        std::cout << key << " freq " << repr_double(double(count) / trials) << '\n';
    return 0;
}

int cmd_layout(int qubits, std::int64_t curves, double dg, double g_max,
               const std::string& out) {
    CurveLayout layout = build_layout(qubits, curves, dg, g_max);
    std::string csv = layout_csv(layout);
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot open " << out << "\n";
            return 1;
        }
        f << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-oscillator quantum state emulator"};
    app.require_subcommand(1);

    std::string device = "ax7maf1";
    std::string out;
    double dg = 0.01;
    double g0 = 0.0;
    bool scaled = false;
    std::uint64_t seed = 0;
    int trials = 1;

    auto* census = app.add_subcommand("census", "Run a device-tolerance state census");
    census->add_option("--device", device, "Device profile name or path");
    census->add_flag("--scaled", scaled, "Sweep in scaled frequency space");
    auto* dg_opt = census->add_option("--dg", dg, "Curve step");
    auto* g0_opt = census->add_option("--g0", g0, "Sweep start");
    census->add_option("--out", out, "CSV output path");

    std::int64_t enc_a = 1;
    double enc_b = 0.0, enc_g = 1.0;
    auto* enc = app.add_subcommand("encode", "Encode (a, b, g) to (phi, theta)");
    enc->add_option("a", enc_a, "State index")->required();
    enc->add_option("b", enc_b, "Secondary coordinate")->required();
    enc->add_option("g", enc_g, "Curve parameter")->required();
    enc->add_option("--device", device, "Device profile for the scaled output");
    enc->add_flag("--scaled", scaled, "Also print omega = phi * cd");

    double dec_phi = 0.0, dec_theta = 0.0, dec_g = 1.0;
    std::int64_t dec_amax = 100000;
    auto* dec = app.add_subcommand("decode", "Invert phi (or theta) back to a (or b)");
    auto* phi_opt = dec->add_option("--phi", dec_phi, "Angle to invert");
    dec->add_option("--g", dec_g, "Curve parameter");
    dec->add_option("--a-max", dec_amax, "Search bound");
    auto* theta_opt = dec->add_option("--theta", dec_theta, "Theta to invert");

    auto* gates = app.add_subcommand("gates", "Dump the gate transition tables as CSV");
    gates->add_option("--out", out, "Output path");

    std::string synth_which;
    auto* synth = app.add_subcommand("synth", "Generate and minimize decode logic");
    synth->add_option("stage", synth_which, "perm or cancel")
        ->required()
        ->check(CLI::IsMember({"perm", "cancel"}));
    synth->add_option("--out", out, "Output path");

    std::string circuit_path;
    auto* sim = app.add_subcommand("sim", "Run a circuit description file");
    sim->add_option("circuit", circuit_path, "Circuit file")->required();
    sim->add_option("--seed", seed, "Measurement seed");
    sim->add_option("--trials", trials, "Rerun count with incrementing seeds");

    int lay_qubits = 2;
    std::int64_t lay_curves = 240000;
    double lay_dg = 1e-4, lay_gmax = 24.0;
    auto* layout = app.add_subcommand("layout", "Dump the curve partition as CSV");
    layout->add_option("--qubits", lay_qubits, "Qubit count");
    layout->add_option("--curves", lay_curves, "Total curve budget");
    layout->add_option("--dg", lay_dg, "Curve spacing");
    layout->add_option("--g-max", lay_gmax, "Upper curve bound");
    layout->add_option("--out", out, "Output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (census->parsed()) {
            if (!*dg_opt) dg = scaled ? 1e-4 : 0.01;
            return cmd_census(device, scaled, dg, g0, bool(*g0_opt), out);
        }
        if (enc->parsed()) return cmd_encode(enc_a, enc_b, enc_g, device, scaled);
        if (dec->parsed()) {
            if (!*phi_opt && !*theta_opt) {
                std::cerr << "decode: need --phi or --theta\n";
                return 1;
            }
            return cmd_decode(dec_phi, dec_g, dec_amax, dec_theta, bool(*theta_opt));
        }
        if (gates->parsed()) return cmd_gates(out);
        if (synth->parsed()) return cmd_synth(synth_which, out);
        if (sim->parsed()) return cmd_sim(circuit_path, seed, trials);
        if (layout->parsed()) return cmd_layout(lay_qubits, lay_curves, lay_dg, lay_gmax, out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
