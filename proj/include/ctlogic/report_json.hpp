#ifndef CTLOGIC_REPORT_JSON_HPP
#define CTLOGIC_REPORT_JSON_HPP

// Machine-readable forms of the reports. Field names are part of the CLI contract.

#include "json.hpp"

#include "ctlogic/core.hpp"
#include "ctlogic/lint.hpp"
#include "ctlogic/sim.hpp"
#include "ctlogic/table2.hpp"
#include "ctlogic/verify.hpp"

namespace ctlogic {

inline nlohmann::ordered_json to_json(const LintIssue& i) {
    return {{"code", i.code}, {"severity", std::string(to_string(i.severity))}, {"message", i.message}, {"ids", i.ids}};
}

inline nlohmann::ordered_json to_json(const MarginReport& m) {
    return {{"fire_min_voltage", m.fire_min_voltage}, {"nonfire_max_voltage", m.nonfire_max_voltage},
            {"low_margin", m.low_margin},             {"high_margin", m.high_margin},
            {"feasible", m.feasible},                 {"parasitic_ff", m.parasitic_ff}};
}

inline nlohmann::ordered_json to_json(const Reduction& r) {
    return {{"row", r.row}, {"baseline", r.baseline}, {"ctp", r.ctp}, {"baseline_count", r.baseline_count},
            {"reduction_pct", r.reduction_pct}};
}

inline nlohmann::ordered_json to_json(const ReductionReport& report) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : report.entries) arr.push_back(to_json(e));
    return arr;
}

inline nlohmann::ordered_json to_json(const CountReport& c) {
    auto lines = nlohmann::ordered_json::array();
    for (const auto& l : c.breakdown)
        lines.push_back({{"element", l.element}, {"instances", l.instances}, {"per_element", l.per_element},
                         {"transistors", l.transistors}});
    return {{"breakdown", lines},           {"total", c.total},
            {"gates", c.gates},             {"ct_gates", c.ct_gates},
            {"polymorphic_gates", c.polymorphic_gates}, {"inverters", c.inverters},
            {"passgates", c.passgates}};
}

inline nlohmann::ordered_json to_json(const EquivalenceReport& r, std::size_t inputs, std::size_t outputs) {
    auto mm = nlohmann::ordered_json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"input", to_bits(m.input, inputs)},
                      {"expected", to_bits(m.expected, outputs)},
                      {"actual", to_bits(m.actual, outputs)}});
    return {{"pass", r.pass}, {"checked", r.checked}, {"mismatches", mm}};
}

/// Evaluate-phase outputs per cycle plus hazards; voltages only in analog mode.
inline nlohmann::ordered_json to_json(const Trace& trace, const Netlist& netlist, const Stimulus& stimulus) {
    auto cycles = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < trace.cycles.size(); ++c) {
        std::string in;
        for (bool b : stimulus.cycles[c].inputs) in += b ? '1' : '0';
        nlohmann::ordered_json j = {{"cycle", c},
                                    {"inputs", in},
                                    {"ct", stimulus.cycles[c].ct ? 1 : 0},
                                    {"outputs", trace.bits(c, Phase::Evaluate, netlist.outputs)},
                                    {"discharge_outputs", trace.bits(c, Phase::Discharge, netlist.outputs)}};
        if (trace.model == Model::Analog) {
            nlohmann::ordered_json v = nlohmann::ordered_json::object();
            for (std::size_t g = 0; g < trace.victims.size(); ++g)
                v[trace.victims[g]] = trace.cycles[c].victim_voltages[g];
            j["victim_voltages"] = v;
        }
        cycles.push_back(j);
    }
    auto hazards = nlohmann::ordered_json::array();
    for (const auto& h : trace.hazards) hazards.push_back({{"cycle", h.cycle}, {"net", h.net}, {"gate", h.gate}});
    return {{"circuit", netlist.name},
            {"model", std::string(to_string(trace.model))},
            {"outputs", netlist.outputs},
            {"cycles", cycles},
            {"hazards", hazards}};
}

}  // namespace ctlogic

#endif  // CTLOGIC_REPORT_JSON_HPP
