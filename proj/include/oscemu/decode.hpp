#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace oscemu {

// Operation nibbles of the instruction set; Empty pads unused slots.
enum class Op { X, Y, Z, M, H, Empty };

// 4-bit code of an op (X=1, Y=2, Z=3, M=4, H=5, Empty=0).
int op_code(Op op);
Op op_from_code(int code);

// Canonical form of an instruction word fragment: repeatedly removes the
// leftmost adjacent equal non-empty pair, compacting left and padding with
// empty nibbles, until no such pair remains.
std::vector<Op> cancel_adjacent(std::vector<Op> word);

// Convolution-switch bits selected by an ordered op sequence: the first op
// sets its first-position bit, each later op the bit keyed by its
// predecessor. Ops must be pairwise distinct.
std::vector<int> perm_mask(const std::vector<Op>& seq);

// Sum-of-products expressions over the instruction W bits, one output bit
// per convolution switch (P bits) or canonical-form bit (C bits). Terms
// and minterms are kept in generation order; dedup is by expression text.
struct SopTables {
    std::array<std::vector<std::string>, 25> expressions;  // rendered product terms
    std::array<std::vector<std::string>, 25> minterms;     // generating bit strings
};

// Enumerates permutations of the five ops (lengths 2..5) and accumulates
// the raw per-P-bit terms.
SopTables generate_perm_sop();

// Enumerates op words with repetition (lengths 2..5), applies the
// adjacent-pair cancellation, and accumulates the raw per-C-bit terms.
SopTables generate_cancel_sop();

// Iterative subsumption passes: a term is removable when another term's
// positive-literal set is contained in its own; repeats until a pass
// removes nothing.
struct MinimizeResult {
    SopTables tables;
    std::int64_t removed = 0;
    std::vector<std::int64_t> pass_removals;
};
MinimizeResult minimize(const SopTables& tables);

// `W_a \cdot W_b + ...` rendering of one output bit's expression list.
std::string render_expression(const std::vector<std::string>& terms);

// True when the product terms (as minterm bit strings) cover the input.
bool evaluate_sop(const std::vector<std::string>& minterms, const std::string& input);

// Instruction-word assembly: 20 groups x 5 slots, each slot a 4-bit op
// plus a 5-bit target, 900 bits total.
struct OpSlot {
    Op op = Op::Empty;
    int target = 0;  // 0..31
    bool operator==(const OpSlot&) const = default;
};
using OpGroup = std::vector<OpSlot>;

// Splits maximal runs of consecutive same-target ops into groups of at
// most five.
std::vector<OpGroup> group_by_qubit(const std::vector<OpSlot>& stream);

struct InstructionWord {
    std::array<std::array<OpSlot, 5>, 20> slots{};
    bool operator==(const InstructionWord&) const = default;
};

InstructionWord build_word(const std::vector<OpGroup>& groups);
std::vector<OpGroup> parse_word(const InstructionWord& word);

// 225 hex characters, most significant bit first.
std::string word_to_hex(const InstructionWord& word);
InstructionWord word_from_hex(const std::string& hex);

}  // namespace oscemu
