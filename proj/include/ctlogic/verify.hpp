#ifndef CTLOGIC_VERIFY_HPP
#define CTLOGIC_VERIFY_HPP

// Exhaustive functional checks against Boolean oracles, and transistor accounting.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ctlogic/gates.hpp"
#include "ctlogic/netlist.hpp"
#include "ctlogic/sim.hpp"

namespace ctlogic {

inline constexpr std::size_t default_truth_cap = 16;
inline constexpr int passgate_transistors = 3;  // transmission pair + interface discharge device

/// Evaluate-phase outputs for every input vector in ascending order.
/// Bit layout of rows and row indices: first declared net is the most significant bit.
struct TruthTable {
    std::size_t inputs = 0;
    std::size_t outputs = 0;
    bool ct = false;
    std::vector<std::uint64_t> rows;

    bool operator==(const TruthTable&) const = default;
};

struct Oracle {
    std::size_t inputs = 0;
    std::size_t outputs = 0;
    std::function<std::uint64_t(std::uint64_t)> fn;
};

struct Mismatch {
    std::uint64_t input = 0;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;

    bool operator==(const Mismatch&) const = default;
};

struct EquivalenceReport {
    bool pass = false;
    std::size_t checked = 0;
    std::vector<Mismatch> mismatches;
};

inline std::string to_bits(std::uint64_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i)
        if ((value >> (width - 1 - i)) & 1U) s[i] = '1';
    return s;
}

inline TruthTable exhaustive_truth(const Netlist& netlist, bool ct, const SimConfig& config = {},
                                   std::size_t cap = default_truth_cap) {
    const std::size_t n = netlist.inputs.size();
    if (n > cap)
        throw contract_error("refusing exhaustive sweep of " + std::to_string(n) + " inputs (cap " +
                             std::to_string(cap) + ")");
    if (netlist.outputs.size() > 64) throw contract_error("truth tables hold at most 64 outputs");

    const Trace trace = run(netlist, exhaustive_stimulus(n, ct), config);
    TruthTable tt{n, netlist.outputs.size(), ct, {}};
    std::vector<std::size_t> out_index;
    for (const auto& o : netlist.outputs) out_index.push_back(trace.net_index(o));
    tt.rows.reserve(trace.cycles.size());
    for (const auto& cycle : trace.cycles) {
        std::uint64_t row = 0;
        for (std::size_t idx : out_index) row = (row << 1) | (cycle.evaluate[idx] ? 1U : 0U);
        tt.rows.push_back(row);
    }
    return tt;
}

inline EquivalenceReport check_equiv(const TruthTable& tt, const Oracle& oracle) {
    if (tt.inputs != oracle.inputs || tt.outputs != oracle.outputs)
        throw contract_error("truth table is " + std::to_string(tt.inputs) + "->" + std::to_string(tt.outputs) +
                             ", oracle is " + std::to_string(oracle.inputs) + "->" + std::to_string(oracle.outputs));
    if (tt.rows.size() != (std::size_t{1} << tt.inputs)) throw contract_error("truth table row count is not 2^n");
    EquivalenceReport report;
    for (std::uint64_t r = 0; r < tt.rows.size(); ++r) {
        const std::uint64_t want = oracle.fn(r);
        if (want != tt.rows[r]) report.mismatches.push_back({r, want, tt.rows[r]});
        ++report.checked;
    }
    report.pass = report.mismatches.empty();
    return report;
}

/// Library cell in one mode as an oracle over its data inputs.
inline Oracle gate_oracle(GateKind kind, bool ct) {
    const std::size_t n = arity(kind);
    auto f = boolean_reference(kind, ct);
    return {n, 1, [n, f](std::uint64_t row) -> std::uint64_t { return f(row_bits(row, n)) ? 1 : 0; }};
}

/// Unsigned product of two 2-bit operands.
inline unsigned reference_multiplier(unsigned a, unsigned b) {
    if (a > 3 || b > 3) throw contract_error("multiplier operands are 2-bit");
    return a * b;
}

/// The four bits sorted descending, read as y3y2y1y0: bit m set iff at least 4-m inputs are 1.
inline unsigned reference_sorter(const std::array<bool, 4>& bits) {
    int ones = 0;
    for (bool b : bits) ones += b ? 1 : 0;
    unsigned out = 0;
    for (int m = 0; m < 4; ++m)
        if (ones >= 4 - m) out |= 1U << m;
    return out;
}

/// Oracle for the built-in design; inputs a1 a0 b1 b0, outputs y3..y0.
inline Oracle multiplier_sorter_oracle(bool ct) {
    return {4, 4, [ct](std::uint64_t row) -> std::uint64_t {
                const unsigned a = static_cast<unsigned>(row >> 2) & 3U;
                const unsigned b = static_cast<unsigned>(row) & 3U;
                if (!ct) return reference_multiplier(a, b);
                return reference_sorter({(a & 2U) != 0, (a & 1U) != 0, (b & 2U) != 0, (b & 1U) != 0});
            }};
}

struct CountLine {
    std::string element;  // gate kind name or "PG"
    int instances = 0;
    int per_element = 0;
    int transistors = 0;
};

struct CountReport {
    std::vector<CountLine> breakdown;  // library order, pass-gates last
    int total = 0;
    int gates = 0;
    int ct_gates = 0;
    int polymorphic_gates = 0;
    int inverters = 0;
    int passgates = 0;
};

inline CountReport transistor_total(const Netlist& n) {
    std::map<GateKind, int> per_kind;
    for (const auto& g : n.gates) ++per_kind[g.kind];
    CountReport r;
    for (GateKind k : all_gate_kinds) {
        auto it = per_kind.find(k);
        if (it == per_kind.end()) continue;
        const int each = transistor_count(k);
        r.breakdown.push_back({std::string(to_string(k)), it->second, each, it->second * each});
        r.total += it->second * each;
        r.gates += it->second;
        if (k == GateKind::INV)
            r.inverters += it->second;
        else
            r.ct_gates += it->second;
        if (is_polymorphic(k)) r.polymorphic_gates += it->second;
    }
    r.passgates = static_cast<int>(n.passgates.size());
    if (r.passgates > 0) {
        r.breakdown.push_back({"PG", r.passgates, passgate_transistors, r.passgates * passgate_transistors});
        r.total += r.passgates * passgate_transistors;
    }
    return r;
}

}  // namespace ctlogic

#endif  // CTLOGIC_VERIFY_HPP
