#ifndef CTLOGIC_SIM_HPP
#define CTLOGIC_SIM_HPP

// Two-phase cycle simulator.
//
// Each stimulus cycle is one Discharge phase followed by one Evaluate phase.
// Discharge: primary inputs and ct read 0, victims are grounded, so inverting
// CT outputs sit at 1, non-inverting CT outputs and pass-gate destinations at 0,
// and inverters follow their driver. Evaluate: inputs take the cycle's values and
// every element settles once, in topological order (zero delay).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctlogic/core.hpp"
#include "ctlogic/errors.hpp"
#include "ctlogic/lint.hpp"
#include "ctlogic/netlist.hpp"
#include "ctlogic/parser.hpp"

namespace ctlogic {

enum class Model { Behavioral, Analog };
enum class Phase { Discharge, Evaluate };

inline constexpr std::string_view to_string(Model m) { return m == Model::Behavioral ? "behavioral" : "analog"; }

inline std::optional<Model> model_from_string(std::string_view s) {
    if (s == "behavioral") return Model::Behavioral;
    if (s == "analog") return Model::Analog;
    return std::nullopt;
}

struct StimulusCycle {
    std::vector<bool> inputs;  // declared input order
    bool ct = false;

    bool operator==(const StimulusCycle&) const = default;
};

struct Stimulus {
    std::vector<StimulusCycle> cycles;

    bool operator==(const Stimulus&) const = default;
};

struct SimConfig {
    Model model = Model::Behavioral;
    AnalogParams analog;
    bool hazard_checking = true;
    bool enforce_lint = true;  // when false only R3 findings are tolerated
};

struct Hazard {
    std::size_t cycle = 0;
    std::string net;
    std::string gate;

    bool operator==(const Hazard&) const = default;
};

struct CycleTrace {
    std::vector<bool> discharge;            // per net, indexed like Trace::nets
    std::vector<bool> evaluate;
    std::vector<double> victim_voltages;    // per Trace::victims, evaluate phase; analog only
};

struct Trace {
    Model model = Model::Behavioral;
    std::vector<std::string> nets;
    std::vector<std::string> victims;       // ids of CT gates, in topological order
    std::vector<CycleTrace> cycles;
    std::vector<Hazard> hazards;

    [[nodiscard]] std::size_t net_index(std::string_view net) const {
        auto it = std::find(nets.begin(), nets.end(), net);
        if (it == nets.end()) throw contract_error("no net named '" + std::string(net) + "' in trace");
        return static_cast<std::size_t>(it - nets.begin());
    }

    [[nodiscard]] bool value(std::size_t cycle, Phase phase, std::string_view net) const {
        const auto& c = cycles.at(cycle);
        return (phase == Phase::Discharge ? c.discharge : c.evaluate)[net_index(net)];
    }

    /// Concatenated bits of the given nets, e.g. "0110" for y3 y2 y1 y0.
    [[nodiscard]] std::string bits(std::size_t cycle, Phase phase, const std::vector<std::string>& of) const {
        std::string s;
        for (const auto& n : of) s += value(cycle, phase, n) ? '1' : '0';
        return s;
    }

    [[nodiscard]] double victim_voltage(std::size_t cycle, std::string_view gate) const {
        auto it = std::find(victims.begin(), victims.end(), gate);
        if (it == victims.end()) throw contract_error("no CT gate named '" + std::string(gate) + "'");
        const auto& v = cycles.at(cycle).victim_voltages;
        if (v.empty()) throw contract_error("victim voltages are only recorded in analog mode");
        return v[static_cast<std::size_t>(it - victims.begin())];
    }
};

/// Reads a .stim file: one "<input bits> <ct bit>" line per cycle, '#' comments.
/// A netlist with no inputs uses a single "<ct bit>" token.
inline Stimulus parse_stimulus(std::string_view text) {
    Stimulus s;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        const auto tokens = detail::tokenize_line(line);
        if (!tokens.empty()) {
            if (tokens.size() > 2) throw parse_error(line_no, tokens[2].column, "expected '<input bits> <ct bit>'");
            auto bits = [&](const detail::Token& t) {
                std::vector<bool> v;
                for (std::size_t i = 0; i < t.text.size(); ++i) {
                    const char c = t.text[i];
                    if (c != '0' && c != '1')
                        throw parse_error(line_no, t.column + i, std::string("expected 0 or 1, got '") + c + "'");
                    v.push_back(c == '1');
                }
                return v;
            };
            StimulusCycle cycle;
            const auto& ct_tok = tokens.back();
            if (ct_tok.text.size() != 1) throw parse_error(line_no, ct_tok.column, "ct must be a single bit");
            cycle.ct = bits(ct_tok).front();
            if (tokens.size() == 2) cycle.inputs = bits(tokens[0]);
            s.cycles.push_back(std::move(cycle));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return s;
}

inline std::string serialize_stimulus(const Stimulus& s) {
    std::string out;
    for (const auto& c : s.cycles) {
        for (bool b : c.inputs) out += b ? '1' : '0';
        if (!c.inputs.empty()) out += ' ';
        out += c.ct ? '1' : '0';
        out += '\n';
    }
    return out;
}

/// Input vector for row `row` of an n-input sweep; the first input is the most significant bit.
inline std::vector<bool> row_bits(std::uint64_t row, std::size_t n) {
    std::vector<bool> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = ((row >> (n - 1 - i)) & 1U) != 0;
    return v;
}

/// All 2^n input vectors in ascending order, each with the same ct.
inline Stimulus exhaustive_stimulus(std::size_t n, bool ct) {
    if (n >= 63) throw contract_error("input sweep too wide");
    Stimulus s;
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) s.cycles.push_back({row_bits(row, n), ct});
    return s;
}

namespace detail {

struct CompiledElement {
    enum class Op { Ct, Inv, Pass };
    Op op;
    const GateSpec* spec = nullptr;
    std::vector<std::size_t> ins;
    std::size_t out = 0;
    std::size_t victim = 0;  // slot in Trace::victims for CT gates
    double parasitic_ff = 0.0;
    std::string id;
};

}  // namespace detail

inline Trace run(const Netlist& netlist, const Stimulus& stimulus, const SimConfig& config = {}) {
    const auto issues = lint(netlist);
    for (const auto& issue : issues) {
        if (issue.severity != Severity::Error) continue;
        if (config.enforce_lint || issue.code != "R3")
            throw netlist_error("netlist '" + netlist.name + "' fails lint: " + format_issue(issue));
    }
    for (std::size_t c = 0; c < stimulus.cycles.size(); ++c)
        if (stimulus.cycles[c].inputs.size() != netlist.inputs.size())
            throw contract_error("stimulus cycle " + std::to_string(c) + " has " +
                                 std::to_string(stimulus.cycles[c].inputs.size()) + " input bits, netlist has " +
                                 std::to_string(netlist.inputs.size()) + " inputs");
    if (config.model == Model::Analog) {
        config.analog.validate();
        std::set<GateKind> checked;
        for (const auto& g : netlist.gates) {
            if (g.kind == GateKind::INV || !checked.insert(g.kind).second) continue;
            const auto& spec = spec_of(g.kind);
            if (!consistency_check(spec.aggressor_weights(), spec.margin_k, config.analog))
                throw parameter_error("analog model disagrees with the threshold model for " +
                                      std::string(to_string(g.kind)) + " under the given parameters");
        }
    }

    Trace trace;
    trace.model = config.model;
    trace.nets = netlist.nets();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < trace.nets.size(); ++i) index.emplace(trace.nets[i], i);

    std::vector<detail::CompiledElement> program;
    for (const auto& r : topo_order(netlist)) {
        detail::CompiledElement e;
        e.id = netlist.id_of(r);
        e.out = index.at(netlist.output_of(r));
        for (const auto& in : netlist.inputs_of(r)) e.ins.push_back(index.at(in));
        if (r.type == ElementRef::Type::Pass) {
            e.op = detail::CompiledElement::Op::Pass;
        } else if (netlist.gates[r.index].kind == GateKind::INV) {
            e.op = detail::CompiledElement::Op::Inv;
        } else {
            e.op = detail::CompiledElement::Op::Ct;
            e.spec = &spec_of(netlist.gates[r.index].kind);
            e.victim = trace.victims.size();
            trace.victims.push_back(e.id);
            if (config.model == Model::Analog)
                e.parasitic_ff = parasitic_for(e.spec->aggressor_weights(), e.spec->margin_k, config.analog);
        }
        program.push_back(std::move(e));
    }
    const std::optional<std::size_t> control =
        netlist.control ? std::optional<std::size_t>(index.at(*netlist.control)) : std::nullopt;

    auto gather = [](const std::vector<bool>& values, const std::vector<std::size_t>& ins) {
        std::vector<bool> v;
        v.reserve(ins.size());
        for (std::size_t i : ins) v.push_back(values[i]);
        return v;
    };

    trace.cycles.reserve(stimulus.cycles.size());
    for (std::size_t c = 0; c < stimulus.cycles.size(); ++c) {
        const auto& cyc = stimulus.cycles[c];
        CycleTrace ct;

        // Discharge
        std::vector<bool> ds(trace.nets.size(), false);
        for (const auto& e : program) {
            switch (e.op) {
                case detail::CompiledElement::Op::Ct: ds[e.out] = e.spec->inverting; break;
                case detail::CompiledElement::Op::Pass: ds[e.out] = false; break;
                case detail::CompiledElement::Op::Inv: ds[e.out] = !ds[e.ins[0]]; break;
            }
        }
        if (config.hazard_checking) {
            for (const auto& e : program) {
                if (e.op != detail::CompiledElement::Op::Ct) continue;
                for (std::size_t in : e.ins)
                    if (ds[in]) trace.hazards.push_back({c, trace.nets[in], e.id});
            }
        }

        // Evaluate; a 1 here counts as a rise (hazards included, so their effect stays visible)
        std::vector<bool> ev(trace.nets.size(), false);
        for (std::size_t i = 0; i < netlist.inputs.size(); ++i) ev[index.at(netlist.inputs[i])] = cyc.inputs[i];
        if (control) ev[*control] = cyc.ct;
        if (config.model == Model::Analog) ct.victim_voltages.assign(trace.victims.size(), 0.0);
        for (const auto& e : program) {
            switch (e.op) {
                case detail::CompiledElement::Op::Ct: {
                    const auto inputs = gather(ev, e.ins);
                    bool fire = false;
                    if (config.model == Model::Behavioral) {
                        fire = gate_fires(*e.spec, inputs, cyc.ct);
                    } else {
                        const auto weights = e.spec->aggressor_weights();
                        const auto drive = e.spec->aggressor_drive(inputs, cyc.ct);
                        ct.victim_voltages[e.victim] = victim_voltage(weights, drive, config.analog, e.parasitic_ff);
                        fire = analog_fire(weights, drive, config.analog, e.parasitic_ff);
                    }
                    ev[e.out] = e.spec->inverting ? !fire : fire;
                    break;
                }
                case detail::CompiledElement::Op::Pass: ev[e.out] = ev[e.ins[0]]; break;
                case detail::CompiledElement::Op::Inv: ev[e.out] = !ev[e.ins[0]]; break;
            }
        }
        ct.discharge = std::move(ds);
        ct.evaluate = std::move(ev);
        trace.cycles.push_back(std::move(ct));
    }
    return trace;
}

}  // namespace ctlogic

#endif  // CTLOGIC_SIM_HPP
