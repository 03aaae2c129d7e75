#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oscemu {

// Construction-time coefficient form: a magnitude plus imaginary/negative
// flags, the public path for building amplitudes.
struct Coefficient {
    double magnitude = 1.0;
    bool imaginary = false;
    bool negative = false;

    std::complex<double> value() const;
};

// One basis component of an ensemble.
struct PureState {
    std::complex<double> amp;
    std::string val;  // bit string, qubit 0 leftmost
};

using DensityMatrix = std::array<std::array<std::complex<double>, 2>, 2>;

struct ResourceReport {
    std::size_t peak_states = 0;
    std::map<std::string, std::int64_t> gate_counts;
    std::uint64_t flag_bits = 0;  // 2^(Q+1)
};

// Sparse pure-state ensemble with chainable gates and seeded projective
// measurement.
class Ensemble {
public:
    explicit Ensemble(int num_qubits);
    Ensemble(const std::vector<PureState>& states, int num_qubits);

    Ensemble& x(int q);
    Ensemble& y(int q);
    Ensemble& z(int q);
    Ensemble& h(int q);
    Ensemble& cx(int source, int target);

    // Projective measurement: computes P(0), draws from the seeded
    // generator, zeroes inconsistent amplitudes and renormalizes.
    int m(int q);
    int m(int q, const std::string& classical_name);

    DensityMatrix get_density_matrix(int q) const;

    // (alpha, beta) of an unentangled qubit; throws when the reduced state
    // is mixed.
    std::pair<std::complex<double>, std::complex<double>> get_components(int q) const;

    ResourceReport report_max_requirements() const;

    void seed(std::uint64_t s);
    double norm_squared() const;
    int num_qubits() const { return qubits_; }
    const std::vector<PureState>& states() const { return states_; }
    const std::map<std::string, int>& classical_bits() const { return classical_; }

private:
    void apply_single(int q, const std::array<std::array<std::complex<double>, 2>, 2>& m,
                      const char* name);
    void merge_and_prune(std::vector<PureState> next);
    void check_qubit(int q) const;

    int qubits_;
    std::vector<PureState> states_;
    std::map<std::string, int> classical_;
    std::mt19937_64 rng_{0};
    std::size_t peak_states_ = 1;
    std::map<std::string, std::int64_t> gate_counts_;
};

// Line-based circuit description:
//   qubits N | x q | y q | z q | h q | cx s t | m q -> name | if name op q
struct CircuitInstruction {
    std::string op;
    int q0 = 0;
    int q1 = 0;
    std::string name;
    std::string cond_op;
};

struct Circuit {
    int qubits = 0;
    std::vector<CircuitInstruction> instructions;
};

Circuit parse_circuit(const std::string& text);
Ensemble run_circuit(const Circuit& circuit, std::uint64_t seed);

}  // namespace oscemu
