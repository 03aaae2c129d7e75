#pragma once

#include <cstdint>
#include <string>

namespace oscemu {

// Oscillator device parameters: stability rating (ppm), maximum stable
// output frequency (Hz) and the scaling coefficient that stretches the
// encoded angle range onto the device bandwidth.
struct DeviceSpec {
    double stability_ppm = 0.0;
    double omega_max = 0.0;
    double cd = 0.0;
    std::string name;
};

// Frequency-distinguishability tolerance at a given output frequency.
double d_omega(const DeviceSpec& spec, double omega);

// cd such that cd * l_b == omega_max.
double scaling_coefficient(double l_b, double omega_max);

// Component count of a naive discrete-oscillator register: 3 * 2^Q - 1.
std::int64_t naive_component_count(int qubits);

// Probability precision (percent) maintainable with Q qubits: 2^(Q-20) %.
double precision_percent(int qubits);

// Precision (percent) between two observables given the per-curve state count.
double per_curve_precision(double states_per_curve);

// Flag memory geometry for a Q-qubit machine.
struct FlagMemoryLayout {
    int qubits = 1;
    int word_width = 16;

    std::uint64_t flag_bits() const;  // 2^(Q+1)
    static constexpr int qubit_count_field_bits = 5;
};

struct FlagAddress {
    std::uint64_t bit_address;
    std::uint64_t word_address;
    std::uint64_t offset_in_word;
};

// Shift-based flag addressing: bit address is the state doubled, the word
// address drops the in-word bits, the offset is the remainder.
FlagAddress flag_addresses(std::uint64_t state_bits, const FlagMemoryLayout& layout);

// Key-value profile loading (`stability_ppm`, `omega_max_hz`, `cd`).
DeviceSpec load_profile_file(const std::string& path);

// Built-in profiles: "ax7maf1" and "axplt2500".
DeviceSpec builtin_profile(const std::string& name);

// Resolution order: explicit path, then $OSCEMU_PROFILE_DIR/<name>.conf,
// then ./profiles/<name>.conf, then the built-ins.
DeviceSpec resolve_profile(const std::string& name_or_path);

}  // namespace oscemu
