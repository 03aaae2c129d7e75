#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscemu/device.hpp"

namespace oscemu {

// Result of walking one curve until the device tolerance rejects a state.
struct CurveCount {
    std::int64_t count;   // states accepted
    double value;         // last computed phi (unscaled) or omega (scaled)
    double phi;           // last computed phi in either mode
    double d_omega;       // tolerance at that value
    std::int64_t a;       // first rejected index
};

// Walks a = 1, 2, ... on curve g, accepting values that stay more than one
// tolerance below the previously accepted value; unencodable indices are
// skipped. Stops at the first rejection.
CurveCount count_states_on_curve(double g, const DeviceSpec& spec, bool scaled);

struct CensusRow {
    double g;
    double phi;
    double omega;
    std::int64_t a;
    double gap;      // distance to the previous curve's terminal value
    double d_omega;  // tolerance at this curve's terminal value
};

struct CensusReport {
    std::int64_t total_states = 0;
    double terminal_g = 0.0;
    double terminal_phi = 0.0;
    double terminal_omega = 0.0;
    double terminal_gap = 0.0;
    double terminal_d_omega = 0.0;
    std::int64_t curves_counted = 0;
    bool scaled = false;
    std::vector<CensusRow> rows;
};

// Sweeps g upward in steps of dg, counting states per curve, until adjacent
// curves' terminal values collapse into the tolerance band.
CensusReport census_unscaled(const DeviceSpec& spec, double g0 = 0.0, double dg = 0.01,
                             bool keep_rows = true);

// Scaled sweep in omega = phi * cd; widens dg adaptively on tolerance
// collapse and terminates when omega exceeds the device maximum.
CensusReport census_scaled(const DeviceSpec& spec, double g0 = 1.0, double dg = 1e-4,
                           bool keep_rows = false);

// CSV rows `g,phi,omega,a,dphi_or_domega,d_omega`, full double precision.
void emit_csv(const CensusReport& report, const std::string& path);

// Summary block in the emulator's canonical print format.
std::string summary_text(const CensusReport& report, const DeviceSpec& spec);

}  // namespace oscemu
