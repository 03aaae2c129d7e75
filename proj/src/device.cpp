#include "oscemu/device.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oscemu {

double d_omega(const DeviceSpec& spec, double omega) {
    if (omega < 0) throw std::domain_error("d_omega: omega must be non-negative");
    return spec.stability_ppm * (omega / 1000000.0);
}

double scaling_coefficient(double l_b, double omega_max) {
    if (l_b <= 0) throw std::domain_error("scaling_coefficient: l_b must be positive");
    return omega_max / l_b;
}

std::int64_t naive_component_count(int qubits) {
    if (qubits < 0) throw std::domain_error("naive_component_count: negative qubit count");
    return 3 * (std::int64_t(1) << qubits) - 1;
}

double precision_percent(int qubits) {
    if (qubits < 1) throw std::domain_error("precision_percent: qubit count must be >= 1");
    return std::ldexp(1.0, qubits - 20);
}

double per_curve_precision(double states_per_curve) {
    if (states_per_curve <= 0)
        throw std::domain_error("per_curve_precision: states_per_curve must be positive");
    return 100.0 / (2.0 * states_per_curve);
}

std::uint64_t FlagMemoryLayout::flag_bits() const {
    return std::uint64_t(1) << (qubits + 1);
}

FlagAddress flag_addresses(std::uint64_t state_bits, const FlagMemoryLayout& layout) {
    if (state_bits >= (std::uint64_t(1) << layout.qubits))
        throw std::domain_error("flag_addresses: state out of range");
    if (layout.word_width <= 1 || !std::has_single_bit(unsigned(layout.word_width)))
        throw std::domain_error("flag_addresses: word width must be a power of two");
    int shift = std::countr_zero(unsigned(layout.word_width)) - 1;
    std::uint64_t bit = state_bits << 1;
    std::uint64_t word = state_bits >> shift;
    return {bit, word, bit % std::uint64_t(layout.word_width)};
}

DeviceSpec load_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open device profile: " + path);
    DeviceSpec spec;
    spec.name = std::filesystem::path(path).stem().string();
    bool have_ppm = false, have_max = false;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "stability_ppm") {
            spec.stability_ppm = std::stod(val);
            have_ppm = true;
        } else if (key == "omega_max_hz") {
            spec.omega_max = std::stod(val);
            have_max = true;
        } else if (key == "cd") {
            spec.cd = std::stod(val);
        } else if (!key.empty()) {
            throw std::runtime_error("unknown profile key: " + key);
        }
    }
    if (!have_ppm || !have_max)
        throw std::runtime_error("profile missing stability_ppm or omega_max_hz: " + path);
    if (spec.stability_ppm < 0 || spec.omega_max <= 0 || spec.cd < 0)
        throw std::runtime_error("profile values out of range: " + path);
    return spec;
}

DeviceSpec builtin_profile(const std::string& name) {
    if (name == "ax7maf1" || name == "AX7MAF1")
        return {50.0, 2.1e9, 2309321037.0, "ax7maf1"};
    if (name == "axplt2500" || name == "AXPLT2500")
        return {3.2, 12e9, 13196120211.0, "axplt2500"};
    throw std::runtime_error("unknown device profile: " + name);
}

DeviceSpec resolve_profile(const std::string& name_or_path) {
    namespace fs = std::filesystem;
    if (fs::exists(name_or_path) && fs::is_regular_file(name_or_path))
        return load_profile_file(name_or_path);
    const char* dir = std::getenv("OSCEMU_PROFILE_DIR");
    if (dir) {
        fs::path p = fs::path(dir) / (name_or_path + ".conf");
        if (fs::exists(p)) return load_profile_file(p.string());
    }
    fs::path local = fs::path("profiles") / (name_or_path + ".conf");
    if (fs::exists(local)) return load_profile_file(local.string());
    return builtin_profile(name_or_path);
}

}  // namespace oscemu
