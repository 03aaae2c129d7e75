#include "oscemu/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace oscemu {

namespace {

constexpr double kPruneThreshold = 1e-12;

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

const std::complex<double> kI{0.0, 1.0};

Mat2 mat_x() {
    return {{{0.0, 1.0}, {1.0, 0.0}}};
}
Mat2 mat_y() {
    return {{{0.0, -kI}, {kI, 0.0}}};
}
Mat2 mat_z() {
    return {{{1.0, 0.0}, {0.0, -1.0}}};
}
Mat2 mat_h() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{{s, s}, {s, -s}}};
}

}  // namespace

std::complex<double> Coefficient::value() const {
    if (magnitude < 0) throw std::domain_error("Coefficient: magnitude must be >= 0");
    std::complex<double> v = magnitude;
    if (imaginary) v *= kI;
    if (negative) v = -v;
    return v;
}

Ensemble::Ensemble(int num_qubits) : qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 24)
        throw std::domain_error("Ensemble: qubit count out of supported range");
    states_.push_back({1.0, std::string(std::size_t(num_qubits), '0')});
}

Ensemble::Ensemble(const std::vector<PureState>& states, int num_qubits)
    : qubits_(num_qubits), states_(states) {
    if (num_qubits < 1 || num_qubits > 24)
        throw std::domain_error("Ensemble: qubit count out of supported range");
    for (const PureState& s : states_)
        if (int(s.val.size()) != num_qubits)
            throw std::domain_error("Ensemble: state width mismatch");
    double n = norm_squared();
    if (std::fabs(n - 1.0) > 1e-9) throw std::domain_error("Ensemble: states not normalized");
    peak_states_ = states_.size();
}

void Ensemble::check_qubit(int q) const {
    if (q < 0 || q >= qubits_) throw std::domain_error("qubit index out of range");
}

void Ensemble::merge_and_prune(std::vector<PureState> next) {
    std::unordered_map<std::string, std::complex<double>> merged;
    std::vector<std::string> order;
    for (PureState& s : next) {
        auto [it, fresh] = merged.try_emplace(s.val, 0.0);
        if (fresh) order.push_back(s.val);
        it->second += s.amp;
    }
    states_.clear();
    for (const std::string& key : order) {
        std::complex<double> amp = merged[key];
        if (std::abs(amp) > kPruneThreshold) states_.push_back({amp, key});
    }
    peak_states_ = std::max(peak_states_, states_.size());
}

void Ensemble::apply_single(int q, const Mat2& m, const char* name) {
    check_qubit(q);
    std::vector<PureState> next;
    next.reserve(states_.size() * 2);
    for (const PureState& s : states_) {
        int bit = s.val[q] - '0';
        for (int out = 0; out < 2; ++out) {
            std::complex<double> coeff = m[out][bit];
            if (coeff == 0.0) continue;
            std::string val = s.val;
            val[q] = char('0' + out);
            next.push_back({s.amp * coeff, std::move(val)});
        }
    }
    merge_and_prune(std::move(next));
    gate_counts_[name] += 1;
}

Ensemble& Ensemble::x(int q) {
    apply_single(q, mat_x(), "x");
    return *this;
}
Ensemble& Ensemble::y(int q) {
    apply_single(q, mat_y(), "y");
    return *this;
}
Ensemble& Ensemble::z(int q) {
    apply_single(q, mat_z(), "z");
    return *this;
}
Ensemble& Ensemble::h(int q) {
    apply_single(q, mat_h(), "h");
    return *this;
}

Ensemble& Ensemble::cx(int source, int target) {
    check_qubit(source);
    check_qubit(target);
    if (source == target) throw std::domain_error("cx: source equals target");
    std::vector<PureState> next;
    next.reserve(states_.size());
    for (const PureState& s : states_) {
        std::string val = s.val;
        if (val[source] == '1') val[target] = val[target] == '0' ? '1' : '0';
        next.push_back({s.amp, std::move(val)});
    }
    merge_and_prune(std::move(next));
    gate_counts_["cx"] += 1;
    return *this;
}

int Ensemble::m(int q) {
    check_qubit(q);
    double p0 = 0.0;
    for (const PureState& s : states_)
        if (s.val[q] == '0') p0 += std::norm(s.amp);
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    int result = u > p0 ? 1 : 0;
    if ((result == 0 && p0 <= 0.0) || (result == 1 && p0 >= 1.0)) result ^= 1;
    char keep = char('0' + result);
    std::vector<PureState> next;
    for (const PureState& s : states_)
        if (s.val[q] == keep) next.push_back(s);
    double p = result == 1 ? 1.0 - p0 : p0;
    double scale = 1.0 / std::sqrt(p);
    for (PureState& s : next) s.amp *= scale;
    merge_and_prune(std::move(next));
    gate_counts_["m"] += 1;
    return result;
}

int Ensemble::m(int q, const std::string& classical_name) {
    int bit = m(q);
    classical_[classical_name] = bit;
    return bit;
}

DensityMatrix Ensemble::get_density_matrix(int q) const {
    check_qubit(q);
    DensityMatrix rho{};
    for (const PureState& a : states_) {
        for (const PureState& b : states_) {
            // partial trace: outer amplitudes must agree on every other qubit
            bool same_rest = true;
            for (int k = 0; k < qubits_; ++k)
                if (k != q && a.val[k] != b.val[k]) {
                    same_rest = false;
                    break;
                }
            if (!same_rest) continue;
            int i = a.val[q] - '0';
            int j = b.val[q] - '0';
            rho[i][j] += a.amp * std::conj(b.amp);
        }
    }
    return rho;
}

std::pair<std::complex<double>, std::complex<double>> Ensemble::get_components(int q) const {
    DensityMatrix rho = get_density_matrix(q);
    std::complex<double> purity = rho[0][0] * rho[0][0] + rho[0][1] * rho[1][0] +
                                  rho[1][0] * rho[0][1] + rho[1][1] * rho[1][1];
    if (std::abs(purity - 1.0) > 1e-9)
        throw std::runtime_error("get_components: qubit is entangled");
    double a_mag = std::sqrt(std::max(0.0, rho[0][0].real()));
    if (a_mag < 1e-12) return {0.0, 1.0};
    return {a_mag, rho[1][0] / a_mag};
}

ResourceReport Ensemble::report_max_requirements() const {
    ResourceReport report;
    report.peak_states = peak_states_;
    report.gate_counts = gate_counts_;
    report.flag_bits = std::uint64_t(1) << (qubits_ + 1);
    return report;
}

void Ensemble::seed(std::uint64_t s) {
    rng_.seed(s);
}

double Ensemble::norm_squared() const {
    double n = 0.0;
    for (const PureState& s : states_) n += std::norm(s.amp);
    return n;
}

Circuit parse_circuit(const std::string& text) {
    Circuit circuit;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        auto fail = [&](const std::string& why) {
            throw std::runtime_error("circuit line " + std::to_string(lineno) + ": " + why);
        };
        if (tok == "qubits") {
            if (!(ls >> circuit.qubits) || circuit.qubits < 1) fail("bad qubit count");
        } else if (tok == "x" || tok == "y" || tok == "z" || tok == "h") {
            CircuitInstruction ins;
            ins.op = tok;
            if (!(ls >> ins.q0)) fail("missing qubit");
            circuit.instructions.push_back(ins);
        } else if (tok == "cx") {
            CircuitInstruction ins;
            ins.op = "cx";
            if (!(ls >> ins.q0 >> ins.q1)) fail("missing qubits");
            circuit.instructions.push_back(ins);
        } else if (tok == "m") {
            CircuitInstruction ins;
            ins.op = "m";
            std::string arrow;
            if (!(ls >> ins.q0 >> arrow >> ins.name) || arrow != "->")
                fail("expected `m q -> name`");
            circuit.instructions.push_back(ins);
        } else if (tok == "if") {
            CircuitInstruction ins;
            ins.op = "if";
            if (!(ls >> ins.name >> ins.cond_op >> ins.q0)) fail("expected `if name op q`");
            if (ins.cond_op != "x" && ins.cond_op != "y" && ins.cond_op != "z" &&
                ins.cond_op != "h")
                fail("unsupported conditional op");
            circuit.instructions.push_back(ins);
        } else {
            fail("unknown instruction `" + tok + "`");
        }
    }
    if (circuit.qubits == 0) throw std::runtime_error("circuit: missing `qubits N` line");
    for (const CircuitInstruction& ins : circuit.instructions) {
        bool ok = ins.q0 >= 0 && ins.q0 < circuit.qubits;
        if (ins.op == "cx")
            ok = ok && ins.q1 >= 0 && ins.q1 < circuit.qubits && ins.q0 != ins.q1;
        if (!ok) throw std::runtime_error("circuit: qubit index out of range");
    }
    return circuit;
}

Ensemble run_circuit(const Circuit& circuit, std::uint64_t seed) {
    Ensemble e(circuit.qubits);
    e.seed(seed);
    for (const CircuitInstruction& ins : circuit.instructions) {
        if (ins.op == "x") e.x(ins.q0);
        else if (ins.op == "y") e.y(ins.q0);
        else if (ins.op == "z") e.z(ins.q0);
        else if (ins.op == "h") e.h(ins.q0);
        else if (ins.op == "cx") e.cx(ins.q0, ins.q1);
        else if (ins.op == "m") e.m(ins.q0, ins.name);
        else if (ins.op == "if") {
            auto it = e.classical_bits().find(ins.name);
            if (it == e.classical_bits().end())
                throw std::runtime_error("circuit: unknown classical bit " + ins.name);
            if (it->second) {
                if (ins.cond_op == "x") e.x(ins.q0);
                else if (ins.cond_op == "y") e.y(ins.q0);
                else if (ins.cond_op == "z") e.z(ins.q0);
                else e.h(ins.q0);
            }
        }
    }
    return e;
}

}  // namespace oscemu
