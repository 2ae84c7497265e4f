#ifndef CTLOGIC_NETLIST_HPP
#define CTLOGIC_NETLIST_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "ctlogic/gates.hpp"

namespace ctlogic {

struct GateInstance {
    std::string id;
    GateKind kind = GateKind::INV;
    std::vector<std::string> input_nets;  // data inputs only; P_ cells read the control implicitly
    std::string output_net;
    std::size_t decl = 0;                 // position among all gates and pass-gates

    bool operator==(const GateInstance&) const = default;
};

/// Transmission gate between an inverting CT output and a CT input. Its
/// destination is discharged with the victims, so downstream gates see a fresh rise.
struct PassGate {
    std::string id;
    std::string source_net;
    std::string destination_net;
    std::size_t decl = 0;

    bool operator==(const PassGate&) const = default;
};

struct ElementRef {
    enum class Type { Gate, Pass };
    Type type;
    std::size_t index;

    bool operator==(const ElementRef&) const = default;
};

struct Netlist {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::optional<std::string> control;
    std::vector<GateInstance> gates;
    std::vector<PassGate> passgates;

    bool operator==(const Netlist&) const = default;

    GateInstance& add_gate(std::string id, GateKind kind, std::vector<std::string> ins, std::string out) {
        gates.push_back({std::move(id), kind, std::move(ins), std::move(out), next_decl()});
        return gates.back();
    }

    PassGate& add_passgate(std::string id, std::string src, std::string dst) {
        passgates.push_back({std::move(id), std::move(src), std::move(dst), next_decl()});
        return passgates.back();
    }

    [[nodiscard]] std::size_t element_count() const { return gates.size() + passgates.size(); }

    [[nodiscard]] std::vector<ElementRef> elements_in_declaration_order() const {
        std::vector<ElementRef> refs;
        refs.reserve(element_count());
        for (std::size_t i = 0; i < gates.size(); ++i) refs.push_back({ElementRef::Type::Gate, i});
        for (std::size_t i = 0; i < passgates.size(); ++i) refs.push_back({ElementRef::Type::Pass, i});
        std::stable_sort(refs.begin(), refs.end(), [&](const ElementRef& a, const ElementRef& b) {
            return decl_of(a) < decl_of(b);
        });
        return refs;
    }

    [[nodiscard]] std::size_t decl_of(const ElementRef& r) const {
        return r.type == ElementRef::Type::Gate ? gates[r.index].decl : passgates[r.index].decl;
    }

    [[nodiscard]] const std::string& id_of(const ElementRef& r) const {
        return r.type == ElementRef::Type::Gate ? gates[r.index].id : passgates[r.index].id;
    }

    [[nodiscard]] const std::string& output_of(const ElementRef& r) const {
        return r.type == ElementRef::Type::Gate ? gates[r.index].output_net : passgates[r.index].destination_net;
    }

    [[nodiscard]] std::vector<std::string> inputs_of(const ElementRef& r) const {
        if (r.type == ElementRef::Type::Pass) return {passgates[r.index].source_net};
        return gates[r.index].input_nets;
    }

    /// Every net, each once: primary inputs, control, element outputs in
    /// declaration order, then nets that are read but never driven.
    [[nodiscard]] std::vector<std::string> nets() const {
        std::vector<std::string> out;
        std::unordered_set<std::string> seen;
        auto push = [&](const std::string& n) {
            if (seen.insert(n).second) out.push_back(n);
        };
        for (const auto& n : inputs) push(n);
        if (control) push(*control);
        const auto order = elements_in_declaration_order();
        for (const auto& r : order) push(output_of(r));
        for (const auto& r : order)
            for (const auto& n : inputs_of(r)) push(n);
        for (const auto& n : outputs) push(n);
        return out;
    }

    [[nodiscard]] bool uses_polymorphic_gates() const {
        return std::any_of(gates.begin(), gates.end(), [](const GateInstance& g) { return is_polymorphic(g.kind); });
    }

private:
    [[nodiscard]] std::size_t next_decl() const {
        std::size_t next = 0;
        for (const auto& g : gates) next = std::max(next, g.decl + 1);
        for (const auto& p : passgates) next = std::max(next, p.decl + 1);
        return next;
    }
};

/// One library gate wired straight to primary inputs a, b[, c], control ct
/// (polymorphic kinds only) and output y.
inline Netlist gate_cell(GateKind kind) {
    static const char* const names[] = {"a", "b", "c"};
    Netlist n;
    n.name = "cell_" + std::string(to_string(kind));
    for (std::size_t i = 0; i < arity(kind); ++i) n.inputs.emplace_back(names[i]);
    if (is_polymorphic(kind)) n.control = "ct";
    n.outputs = {"y"};
    n.add_gate("g0", kind, n.inputs, "y");
    return n;
}

/// 2-bit multiplier (ct=0) / 4-bit descending sorter (ct=1).
///
/// Outputs y3..y0. With ct=0, y3y2y1y0 = (a1a0) * (b1b0). With ct=1 the four
/// input bits come out sorted, so y3 = OR4, y2 = at-least-2, y1 = at-least-3,
/// y0 = AND4. Every inverting CT output that feeds a CT input crosses a pass-gate.
inline Netlist multiplier_sorter() {
    using K = GateKind;
    Netlist n;
    n.name = "multiplier_sorter";
    n.inputs = {"a1", "a0", "b1", "b0"};
    n.control = "ct";
    n.outputs = {"y3", "y2", "y1", "y0"};

    // ct=0: a0&b0, ct=1: a0|b0
    n.add_gate("g_lo", K::P_AND2_OR2, {"a0", "b0"}, "lo");
    // complements of the low and high partial products, re-timed through pass-gates
    n.add_gate("g_nlo", K::NAND2, {"a0", "b0"}, "nlo");
    n.add_passgate("pg_nlo", "nlo", "nlo_p");
    n.add_gate("i_s", K::INV, {"nlo"}, "s");
    n.add_gate("g_nhi", K::NAND2, {"a1", "b1"}, "nhi");
    n.add_passgate("pg_nhi", "nhi", "nhi_p");
    n.add_gate("i_t", K::INV, {"nhi"}, "t");

    // y3: AND4 / OR4
    n.add_gate("g_y3", K::P_AND3_OR3, {"a1", "b1", "lo"}, "y3");
    // y0: a0b0 / AND4  =  not(nlo + ct * nhi)
    n.add_gate("g_y0", K::AOI21, {"ct", "nhi_p", "nlo_p"}, "y0");

    // y2: a1b1 * not(a0b0) / at least two of four
    n.add_gate("g_w1", K::P_OR3_OA21, {"a1", "s", "b1"}, "w1");
    n.add_gate("g_w2", K::AOI21, {"a0", "b0", "ct"}, "w2");
    n.add_passgate("pg_w2", "w2", "w2_p");
    n.add_gate("g_w3", K::P_OR3_OA21, {"a0", "b0", "t"}, "w3");
    n.add_gate("g_y2", K::P_AO21_OA21, {"w1", "w3", "w2_p"}, "y2");

    // y1: a1b0 xor a0b1 / at least three of four
    n.add_gate("g_q1", K::OAI21, {"s", "t", "ct"}, "q1");
    n.add_passgate("pg_q1", "q1", "q1_p");
    n.add_gate("g_nx", K::NAND2, {"a0", "b1"}, "nx");
    n.add_gate("i_x", K::INV, {"nx"}, "x");
    n.add_gate("g_q2", K::AOI21, {"a1", "b0", "x"}, "q2");
    n.add_passgate("pg_q2", "q2", "q2_p");
    n.add_gate("g_y1", K::AOI21, {"q1_p", "y3", "q2_p"}, "y1");
    return n;
}

}  // namespace ctlogic

#endif  // CTLOGIC_NETLIST_HPP
