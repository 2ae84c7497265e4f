#ifndef CTLOGIC_VCD_HPP
#define CTLOGIC_VCD_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "ctlogic/netlist.hpp"
#include "ctlogic/sim.hpp"

namespace ctlogic {

namespace detail {

// Short printable identifiers: '!'..'~', then two characters, and so on.
inline std::string vcd_identifier(std::size_t index) {
    constexpr std::size_t base = 94;
    std::string id;
    do {
        id += static_cast<char>('!' + index % base);
        index /= base;
    } while (index-- > 0);
    return id;
}

inline std::string vcd_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "r%.12g", v);
    return buf;
}

}  // namespace detail

/// Value Change Dump of a trace. Cycle t's discharge phase is at time 2t, its
/// evaluate phase at 2t+1. Analog traces add one real variable per victim.
inline std::string export_vcd(const Trace& trace, const Netlist& netlist) {
    const std::size_t net_count = trace.nets.size();
    const bool analog = trace.model == Model::Analog;
    const std::size_t var_count = net_count + (analog ? trace.victims.size() : 0);
    std::vector<std::string> ids(var_count);
    for (std::size_t i = 0; i < var_count; ++i) ids[i] = detail::vcd_identifier(i);

    std::ostringstream os;
    os << "$comment\n  two-phase crosstalk trace: cycle t discharge at #2t, evaluate at #2t+1\n$end\n";
    os << "$timescale 1ns $end\n";
    os << "$scope module " << netlist.name << " $end\n";
    for (std::size_t i = 0; i < net_count; ++i) os << "$var wire 1 " << ids[i] << ' ' << trace.nets[i] << " $end\n";
    if (analog)
        for (std::size_t v = 0; v < trace.victims.size(); ++v)
            os << "$var real 64 " << ids[net_count + v] << " vic_" << trace.victims[v] << " $end\n";
    os << "$upscope $end\n$enddefinitions $end\n";

    os << "#0\n$dumpvars\n";
    if (trace.cycles.empty()) {
        for (std::size_t i = 0; i < net_count; ++i) os << 'x' << ids[i] << '\n';
        if (analog)
            for (std::size_t v = 0; v < trace.victims.size(); ++v) os << "r0 " << ids[net_count + v] << '\n';
        os << "$end\n";
        return os.str();
    }

    // Snapshot of every variable at a time step; bits as '0'/'1', reals as text.
    auto snapshot = [&](std::size_t cycle, Phase phase) {
        std::vector<std::string> values(var_count);
        const auto& c = trace.cycles[cycle];
        const auto& bits = phase == Phase::Discharge ? c.discharge : c.evaluate;
        for (std::size_t i = 0; i < net_count; ++i) values[i] = bits[i] ? "1" : "0";
        if (analog)
            for (std::size_t v = 0; v < trace.victims.size(); ++v)
                values[net_count + v] = detail::vcd_real(phase == Phase::Discharge ? 0.0 : c.victim_voltages[v]);
        return values;
    };
    auto emit = [&](std::size_t i, const std::string& value) {
        if (i < net_count)
            os << value << ids[i] << '\n';
        else
            os << value << ' ' << ids[i] << '\n';
    };

    std::vector<std::string> current = snapshot(0, Phase::Discharge);
    for (std::size_t i = 0; i < var_count; ++i) emit(i, current[i]);
    os << "$end\n";

    std::size_t time = 1;
    for (std::size_t cycle = 0; cycle < trace.cycles.size(); ++cycle) {
        for (Phase phase : {Phase::Discharge, Phase::Evaluate}) {
            if (cycle == 0 && phase == Phase::Discharge) continue;
            const auto next = snapshot(cycle, phase);
            bool stamped = false;
            for (std::size_t i = 0; i < var_count; ++i) {
                if (next[i] == current[i]) continue;
                if (!stamped) {
                    os << '#' << time << '\n';
                    stamped = true;
                }
                emit(i, next[i]);
            }
            current = next;
            ++time;
        }
    }
    os << '#' << time << '\n';
    return os.str();
}

}  // namespace ctlogic

#endif  // CTLOGIC_VCD_HPP
