#include "oscemu/flags.hpp"

#include <stdexcept>

namespace oscemu {

FlagPair mul_i(FlagPair p) {
    if (p.imaginary == 0 && p.negative == 0) return {1, 0};
    if (p.imaginary == 0 && p.negative == 1) return {1, 1};
    if (p.imaginary == 1 && p.negative == 0) return {0, 1};
    return {0, 0};
}

FlagPair negate(FlagPair p) {
    return {p.imaginary, p.negative ^ 1};
}

FlagPair summarize(std::int64_t n_i, std::int64_t n_neg, FlagPair start) {
    if (n_i < 0 || n_neg < 0) throw std::domain_error("summarize: negative counts");
    FlagPair p = start;
    for (std::int64_t k = 0; k < n_i % 4; ++k) p = mul_i(p);
    if (n_neg % 2) p = negate(p);
    return p;
}

int successive_gate_count(std::int64_t n_s) {
    if (n_s < 0) throw std::domain_error("successive_gate_count: negative count");
    return int(n_s % 2);
}

FlagStore::FlagStore(int q) : qubits(q) {
    if (q < 1 || q > 31) throw std::domain_error("FlagStore: qubit count out of range");
    pairs.resize(std::size_t(1) << q);
}

std::uint64_t phase_range(const FlagStore& store) {
    const std::size_t n = store.pairs.size();
    if (2 * n > 63) throw std::domain_error("phase_range: flag word too wide to index");
    std::uint64_t index = 0;
    for (std::size_t s = 0; s < n; ++s) {
        index = (index << 1) | std::uint64_t(store.pairs[s].imaginary);
        index = (index << 1) | std::uint64_t(store.pairs[s].negative);
    }
    return index;
}

std::string serialize(const FlagStore& store) {
    std::vector<int> bits;
    bits.reserve(2 * store.pairs.size() + 5);
    for (const FlagPair& p : store.pairs) {
        bits.push_back(p.imaginary);
        bits.push_back(p.negative);
    }
    for (int k = 4; k >= 0; --k) bits.push_back((store.qubits >> k) & 1);
    while (bits.size() % 4) bits.push_back(0);

    static const char digits[] = "0123456789abcdef";
    std::string hex;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = bits[i] << 3 | bits[i + 1] << 2 | bits[i + 2] << 1 | bits[i + 3];
        hex += digits[nibble];
    }
    return hex;
}

FlagStore deserialize(const std::string& hex) {
    std::vector<int> bits;
    bits.reserve(hex.size() * 4);
    for (char c : hex) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::runtime_error("deserialize: bad hex digit");
        for (int k = 3; k >= 0; --k) bits.push_back((v >> k) & 1);
    }
    // Recover Q from the total width: flag bits (2^(Q+1)) plus the 5-bit
    // count, padded to the next nibble boundary.
    int qubits = -1;
    for (int q = 1; q <= 31; ++q) {
        std::size_t payload = (std::size_t(1) << (q + 1)) + 5;
        std::size_t padded = (payload + 3) / 4 * 4;
        if (padded == bits.size()) {
            qubits = q;
            break;
        }
    }
    if (qubits < 0) throw std::runtime_error("deserialize: unrecognized length");

    FlagStore store(qubits);
    std::size_t pos = 0;
    for (FlagPair& p : store.pairs) {
        p.imaginary = bits[pos++];
        p.negative = bits[pos++];
    }
    int field = 0;
    for (int k = 0; k < 5; ++k) field = field << 1 | bits[pos++];
    if (field != qubits) throw std::runtime_error("deserialize: qubit count mismatch");
    return store;
}

}  // namespace oscemu
