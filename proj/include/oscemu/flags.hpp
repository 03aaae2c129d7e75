#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oscemu {

// Per-pure-state coefficient flags.
struct FlagPair {
    int imaginary = 0;
    int negative = 0;
    bool operator==(const FlagPair&) const = default;
};

// Single multiplication by i.
FlagPair mul_i(FlagPair p);

// Single negation.
FlagPair negate(FlagPair p);

// Net effect of n_i multiplications by i followed by n_neg negations,
// applied to start. Equivalent to the sequential fold of the single-step
// tables; negations commute with everything so the grouping is sound.
FlagPair summarize(std::int64_t n_i, std::int64_t n_neg, FlagPair start);

// Parity of a run of the same self-inverse gate.
int successive_gate_count(std::int64_t n_s);

// Flag storage for a Q-qubit system: one pair per pure state plus a 5-bit
// qubit-count field.
struct FlagStore {
    int qubits;
    std::vector<FlagPair> pairs;  // indexed by pure-state value, ascending

    explicit FlagStore(int q);
    bool operator==(const FlagStore&) const = default;
};

// Phase-range index of the whole flag word. Pure states are ordered
// ascending by bit-string value with the first state most significant;
// within a pair the imaginary bit outranks the negative bit.
std::uint64_t phase_range(const FlagStore& store);

// Hex serialization: flag bits followed by the 5-bit qubit count, packed
// most significant first and zero-padded to a nibble boundary.
std::string serialize(const FlagStore& store);
FlagStore deserialize(const std::string& hex);

}  // namespace oscemu
