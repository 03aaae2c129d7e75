#include "oscemu/decode.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace oscemu {

namespace {

const std::array<std::string, 5> kNibbles = {"0001 ", "0010 ", "0011 ", "0100 ", "0101 "};
const std::string kEmptyNibble = "0000 ";

// Switch-bit index for an op in first position (key 0) or following a
// given predecessor nibble. Row order matches kNibbles.
int perm_bit_index(int op_idx, int prev_idx /* -1 for first position */) {
    static const int first[5] = {0, 5, 10, 15, 20};
    static const int follow[5][5] = {
        // columns ordered by predecessor in kNibbles order; -1 on diagonal
        {-1, 1, 2, 3, 4},
        {6, -1, 7, 8, 9},
        {11, 12, -1, 13, 14},
        {16, 17, 18, -1, 19},
        {21, 22, 23, 24, -1},
    };
    if (prev_idx < 0) return first[op_idx];
    return follow[op_idx][prev_idx];
}

std::string nibble_of(Op op) {
    switch (op) {
        case Op::X: return kNibbles[0];
        case Op::Y: return kNibbles[1];
        case Op::Z: return kNibbles[2];
        case Op::M: return kNibbles[3];
        case Op::H: return kNibbles[4];
        case Op::Empty: return kEmptyNibble;
    }
    throw std::domain_error("nibble_of: invalid op");
}

Op op_of_nibble(const std::string& nib) {
    for (int i = 0; i < 5; ++i)
        if (nib == kNibbles[i]) return Op(i);
    if (nib == kEmptyNibble) return Op::Empty;
    throw std::domain_error("op_of_nibble: invalid nibble");
}

// Renders the product term of an instruction bit string: W-bit indices
// count nibble characters only, spaces are separators.
std::string expression_of(const std::string& instr_bits) {
    std::string expr;
    int j = -1;
    for (char c : instr_bits) {
        if (c == ' ') continue;
        ++j;
        if (c == '1') {
            if (!expr.empty()) expr += " \\cdot";
            expr += " W_{" + std::to_string(j) + "}";
        }
    }
    return expr;
}

std::vector<std::string> cancel_word_nibbles(std::vector<std::string> word) {
    bool match = true;
    bool zeroes = false;
    while (match && !zeroes) {
        int n = 0;
        while (n < int(word.size())) {
            match = false;
            if (int(word.size()) > n + 1 && word[n + 1] == word[n] && word[n] != kEmptyNibble) {
                match = true;
                std::vector<std::string> next(word.begin(), word.begin() + n);
                next.insert(next.end(), word.begin() + n + 2, word.end());
                next.push_back(kEmptyNibble);
                next.push_back(kEmptyNibble);
                word = std::move(next);
                n = -1;
            }
            n += 1;
        }
        zeroes = true;
        for (const std::string& nib : word)
            if (nib != kEmptyNibble) zeroes = false;
    }
    return word;
}

void accumulate(SopTables& tables, int bit, const std::string& instr_bits) {
    std::string expr = expression_of(instr_bits);
    auto& exprs = tables.expressions[bit];
    if (std::find(exprs.begin(), exprs.end(), expr) == exprs.end()) {
        exprs.push_back(expr);
        tables.minterms[bit].push_back(instr_bits);
    }
}

// Enumerates k-permutations of {0..4} in lexicographic order of indices,
// invoking fn on each.
template <typename Fn>
void for_each_permutation(int length, Fn fn) {
    std::vector<int> perm;
    std::array<bool, 5> used{};
    auto recurse = [&](auto&& self) -> void {
        if (int(perm.size()) == length) {
            fn(perm);
            return;
        }
        for (int i = 0; i < 5; ++i) {
            if (used[i]) continue;
            used[i] = true;
            perm.push_back(i);
            self(self);
            perm.pop_back();
            used[i] = false;
        }
    };
    recurse(recurse);
}

}  // namespace

int op_code(Op op) {
    switch (op) {
        case Op::X: return 1;
        case Op::Y: return 2;
        case Op::Z: return 3;
        case Op::M: return 4;
        case Op::H: return 5;
        case Op::Empty: return 0;
    }
    throw std::domain_error("op_code: invalid op");
}

Op op_from_code(int code) {
    if (code == 0) return Op::Empty;
    if (code >= 1 && code <= 5) return Op(code - 1);
    throw std::domain_error("op_from_code: invalid code");
}

std::vector<Op> cancel_adjacent(std::vector<Op> word) {
    if (word.size() > 5) throw std::domain_error("cancel_adjacent: word too long");
    std::vector<std::string> nibbles;
    for (Op op : word) nibbles.push_back(nibble_of(op));
    nibbles = cancel_word_nibbles(std::move(nibbles));
    std::vector<Op> out;
    for (std::size_t i = 0; i < word.size(); ++i) out.push_back(op_of_nibble(nibbles[i]));
    return out;
}

std::vector<int> perm_mask(const std::vector<Op>& seq) {
    if (seq.empty() || seq.size() > 5) throw std::domain_error("perm_mask: bad length");
    std::vector<int> bits;
    std::array<bool, 5> used{};
    int prev = -1;
    for (Op op : seq) {
        if (op == Op::Empty) throw std::domain_error("perm_mask: empty op in sequence");
        int idx = int(op);
        if (used[idx]) throw std::runtime_error("perm_mask: module reuse");
        used[idx] = true;
        bits.push_back(perm_bit_index(idx, prev));
        prev = idx;
    }
    return bits;
}

SopTables generate_perm_sop() {
    SopTables tables;
    for (int length = 2; length <= 5; ++length) {
        for_each_permutation(length, [&](const std::vector<int>& perm) {
            std::string instr_bits;
            std::array<bool, 25> perm_bits{};
            int prev = -1;
            for (int idx : perm) {
                instr_bits += kNibbles[idx];
                perm_bits[perm_bit_index(idx, prev)] = true;
                prev = idx;
            }
            for (int p = 0; p < 25; ++p)
                if (perm_bits[p]) accumulate(tables, p, instr_bits);
        });
    }
    return tables;
}

SopTables generate_cancel_sop() {
    std::vector<std::string> all_instrs;
    std::vector<std::string> all_combs;
    for (int length = 2; length <= 5; ++length) {
        std::vector<int> word(length, 0);
        while (true) {
            std::vector<std::string> nibbles;
            std::string instr_bits;
            for (int idx : word) {
                nibbles.push_back(kNibbles[idx]);
                instr_bits += kNibbles[idx];
            }
            nibbles = cancel_word_nibbles(std::move(nibbles));
            std::string comb_bits;
            for (const std::string& nib : nibbles) comb_bits += nib;
            for (int pad = length; pad < 5; ++pad) instr_bits += kEmptyNibble;
            while (comb_bits.size() < 25) comb_bits += kEmptyNibble;
            all_instrs.push_back(instr_bits);
            all_combs.push_back(comb_bits);

            int pos = length - 1;
            while (pos >= 0 && word[pos] == 4) word[pos--] = 0;
            if (pos < 0) break;
            ++word[pos];
        }
    }

    SopTables tables;
    for (std::size_t i = 0; i < all_instrs.size(); ++i) {
        const std::string& comb_bits = all_combs[i];
        for (int c = 0; c < int(comb_bits.size()); ++c)
            if (comb_bits[c] == '1') accumulate(tables, c, all_instrs[i]);
    }
    return tables;
}

MinimizeResult minimize(const SopTables& input) {
    MinimizeResult result;
    result.tables = input;
    bool has_deps = true;
    while (has_deps) {
        has_deps = false;
        auto& minterms = result.tables.minterms;
        auto& expressions = result.tables.expressions;

        // term -> indices of the terms it subsumes, per output bit
        std::array<std::map<int, std::vector<int>>, 25> dup_dependencies;
        for (int l = 0; l < 25; ++l) {
            // first occurrence of each minterm string (they are unique in
            // practice, but dependency targets are recorded by first match)
            std::unordered_map<std::string, int> first_index;
            for (int t = 0; t < int(minterms[l].size()); ++t)
                first_index.try_emplace(minterms[l][t], t);
            for (int term = 0; term < int(minterms[l].size()); ++term) {
                std::vector<int> one_bits;
                const std::string& mt = minterms[l][term];
                for (int b = 0; b < int(mt.size()); ++b)
                    if (mt[b] == '1') one_bits.push_back(b);
                for (int other = 0; other < int(minterms[l].size()); ++other) {
                    if (other == term) continue;
                    const std::string& om = minterms[l][other];
                    bool dup = true;
                    for (int b : one_bits)
                        if (b >= int(om.size()) || om[b] == '0') dup = false;
                    if (dup) dup_dependencies[l][term].push_back(first_index.at(om));
                }
            }
        }

        std::array<std::vector<int>, 25> removal_candidates;
        for (int p = 0; p < 25; ++p) {
            for (const auto& [key_term, deps] : dup_dependencies[p]) {
                for (int rm_term : deps) {
                    if (dup_dependencies[p].count(rm_term)) continue;
                    auto& rc = removal_candidates[p];
                    if (std::find(rc.begin(), rc.end(), key_term) == rc.end())
                        rc.push_back(rm_term);
                }
            }
        }

        std::int64_t removed = 0;
        for (int k = 0; k < 25; ++k) {
            std::vector<std::string> kept_exprs, kept_minterms;
            for (int q = 0; q < int(expressions[k].size()); ++q) {
                const auto& rc = removal_candidates[k];
                if (std::find(rc.begin(), rc.end(), q) != rc.end()) {
                    ++removed;
                    continue;
                }
                kept_exprs.push_back(expressions[k][q]);
                kept_minterms.push_back(minterms[k][q]);
            }
            expressions[k] = std::move(kept_exprs);
            minterms[k] = std::move(kept_minterms);
        }
        if (removed != 0) has_deps = true;
        result.removed += removed;
        result.pass_removals.push_back(removed);
    }
    return result;
}

std::string render_expression(const std::vector<std::string>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " +";
        out += terms[i];
    }
    return out;
}

bool evaluate_sop(const std::vector<std::string>& minterms, const std::string& input) {
    for (const std::string& term : minterms) {
        bool covered = true;
        for (int b = 0; b < int(term.size()); ++b) {
            if (term[b] != '1') continue;
            if (b >= int(input.size()) || input[b] != '1') {
                covered = false;
                break;
            }
        }
        if (covered) return true;
    }
    return false;
}

std::vector<OpGroup> group_by_qubit(const std::vector<OpSlot>& stream) {
    std::vector<OpGroup> groups;
    for (const OpSlot& slot : stream) {
        if (slot.op == Op::Empty) throw std::domain_error("group_by_qubit: empty op");
        if (!groups.empty() && groups.back().back().target == slot.target &&
            groups.back().size() < 5) {
            groups.back().push_back(slot);
        } else {
            groups.push_back({slot});
        }
    }
    return groups;
}

InstructionWord build_word(const std::vector<OpGroup>& groups) {
    if (groups.size() > 20) throw std::domain_error("build_word: too many groups");
    InstructionWord word;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        if (groups[gi].empty() || groups[gi].size() > 5)
            throw std::domain_error("build_word: bad group size");
        for (std::size_t si = 0; si < groups[gi].size(); ++si) {
            const OpSlot& slot = groups[gi][si];
            if (slot.target < 0 || slot.target > 31)
                throw std::domain_error("build_word: target out of range");
            word.slots[gi][si] = slot;
        }
    }
    return word;
}

std::vector<OpGroup> parse_word(const InstructionWord& word) {
    std::vector<OpGroup> groups;
    for (const auto& group : word.slots) {
        OpGroup g;
        for (const OpSlot& slot : group)
            if (slot.op != Op::Empty) g.push_back(slot);
        if (!g.empty()) groups.push_back(std::move(g));
    }
    return groups;
}

std::string word_to_hex(const InstructionWord& word) {
    std::vector<int> bits;
    bits.reserve(900);
    for (const auto& group : word.slots) {
        for (const OpSlot& slot : group) {
            int code = op_code(slot.op);
            for (int k = 3; k >= 0; --k) bits.push_back((code >> k) & 1);
            for (int k = 4; k >= 0; --k) bits.push_back((slot.target >> k) & 1);
        }
    }
    static const char digits[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(225);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = bits[i] << 3 | bits[i + 1] << 2 | bits[i + 2] << 1 | bits[i + 3];
        hex += digits[nibble];
    }
    return hex;
}

InstructionWord word_from_hex(const std::string& hex) {
    if (hex.size() != 225) throw std::domain_error("word_from_hex: expected 225 hex chars");
    std::vector<int> bits;
    bits.reserve(900);
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::domain_error("word_from_hex: bad hex digit");
        for (int k = 3; k >= 0; --k) bits.push_back((v >> k) & 1);
    }
    InstructionWord word;
    std::size_t pos = 0;
    for (auto& group : word.slots) {
        for (OpSlot& slot : group) {
            int code = 0;
            for (int k = 0; k < 4; ++k) code = code << 1 | bits[pos++];
            int target = 0;
            for (int k = 0; k < 5; ++k) target = target << 1 | bits[pos++];
            slot = {op_from_code(code), target};
        }
    }
    return word;
}

}  // namespace oscemu
