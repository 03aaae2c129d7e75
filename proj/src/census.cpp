#include "oscemu/census.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "oscemu/codec.hpp"
#include "oscemu/format.hpp"

namespace oscemu {

CurveCount count_states_on_curve(double g, const DeviceSpec& spec, bool scaled) {
    double last = 0.0;
    bool have = false;
    std::int64_t count = 0;
    for (std::int64_t a = 1;; ++a) {
        const double phi = encode(a, 0.0, g).phi;
        const double v = scaled ? phi * spec.cd : phi;
        const double dom = spec.stability_ppm * (v / 1000000.0);
        if (std::isnan(phi)) continue;
        if (!have || last - v > dom) {
            last = v;
            have = true;
            ++count;
        } else {
            return {count, v, phi, dom, a};
        }
    }
}

CensusReport census_unscaled(const DeviceSpec& spec, double g0, double dg, bool keep_rows) {
    if (dg <= 0) throw std::domain_error("census_unscaled: dg must be positive");
    CensusReport report;
    report.scaled = false;
    double g = g0;
    double last_phi = 0.0;
    while (true) {
        g += dg;
        const CurveCount c = count_states_on_curve(g, spec, false);
        report.total_states += c.count;
        report.curves_counted += 1;
        const double phi = c.value;
        const double dphi = std::fabs(last_phi - phi);
        if (keep_rows) report.rows.push_back({g, phi, phi, c.a, dphi, c.d_omega});
        if (dphi < c.d_omega) {
            report.terminal_g = g;
            report.terminal_phi = phi;
            report.terminal_omega = phi;
            report.terminal_gap = dphi;
            report.terminal_d_omega = c.d_omega;
            return report;
        } else if (phi > spec.omega_max) {
            report.terminal_g = g;
            report.terminal_phi = phi;
            report.terminal_omega = phi;
            report.terminal_gap = dphi;
            report.terminal_d_omega = c.d_omega;
            return report;
        }
        last_phi = phi;
    }
}

CensusReport census_scaled(const DeviceSpec& spec, double g0, double dg, bool keep_rows) {
    if (dg <= 0) throw std::domain_error("census_scaled: dg must be positive");
    if (spec.cd <= 0) throw std::domain_error("census_scaled: device cd not set");
    CensusReport report;
    report.scaled = true;
    double g = g0;
    double d_g = dg;
    const double last_omega = 0.0;  // terminal value of the previous surviving curve
    while (true) {
        g += d_g;
        CurveCount c = count_states_on_curve(g, spec, true);
        report.total_states += c.count;
        report.curves_counted += 1;
        double omega = c.value;
        if (keep_rows)
            report.rows.push_back({g, c.phi, omega, c.a, std::fabs(last_omega - omega),
                                   c.d_omega});
        if (std::fabs(last_omega - omega) < c.d_omega) {
            // Curve spacing collapsed into tolerance: widen the step until a
            // distinguishable curve is found, then keep sweeping.
            bool tolerable = false;
            while (!tolerable) {
                const double limit_g = g;
                double d_g_scaler = 2.0;
                d_g = d_g * d_g_scaler;
                g += d_g;
                c = count_states_on_curve(g, spec, true);
                omega = c.value;
                if (std::fabs(last_omega - omega) < c.d_omega) {
                    d_g_scaler += 1.0;
                    d_g = d_g * d_g_scaler;
                    g = limit_g + d_g;
                } else {
                    tolerable = true;
                }
            }
        } else if (omega > spec.omega_max) {
            report.terminal_g = g;
            report.terminal_phi = c.phi;
            report.terminal_omega = omega;
            report.terminal_gap = std::fabs(last_omega - omega);
            report.terminal_d_omega = c.d_omega;
            return report;
        }
    }
}

void emit_csv(const CensusReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    out << "g,phi,omega,a,dphi_or_domega,d_omega\n";
    for (const CensusRow& r : report.rows) {
        out << repr_double(r.g) << ',' << repr_double(r.phi) << ',' << repr_double(r.omega)
            << ',' << r.a << ',' << repr_double(r.gap) << ',' << repr_double(r.d_omega)
            << '\n';
    }
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

std::string summary_text(const CensusReport& report, const DeviceSpec& spec) {
    std::ostringstream out;
    out << "g: " << repr_double(report.terminal_g) << '\n';
    out << "phi: " << repr_double(report.terminal_phi) << '\n';
    if (report.scaled) {
        out << "omega: " << repr_double(report.terminal_omega) << '\n';
        out << "d omega: " << repr_double(report.terminal_gap) << '\n';
        out << "omega = " << repr_double(report.terminal_omega) << " > max omega = "
            << std::int64_t(spec.omega_max) << '\n';
    } else {
        out << "d omega: " << repr_double(report.terminal_gap) << '\n';
        out << "d phi = " << repr_double(report.terminal_gap) << " < d omega = "
            << repr_double(report.terminal_d_omega) << '\n';
    }
    out << "num states: " << report.total_states << '\n';
    return out.str();
}

}  // namespace oscemu
