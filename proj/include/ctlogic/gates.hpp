#ifndef CTLOGIC_GATES_HPP
#define CTLOGIC_GATES_HPP

// The crosstalk gate library: coupling weights, thresholds, polarity and
// transistor cost of every cell, plus the textbook Boolean function each
// cell is supposed to realize in each control mode.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctlogic/core.hpp"
#include "ctlogic/errors.hpp"

namespace ctlogic {

enum class GateKind {
    INV,
    NAND2,
    NOR2,
    AOI21,
    OAI21,
    P_NAND2_NOR2,
    P_AOI21_OAI21,
    P_AND2_OR2,
    P_AND3_OR3,
    P_AO21_OA21,
    P_AND3_OA21,
    P_AND3_AO21,
    P_OR3_OA21,
    P_OR3_AO21,
};

inline constexpr std::array<GateKind, 14> all_gate_kinds = {
    GateKind::INV,          GateKind::NAND2,       GateKind::NOR2,        GateKind::AOI21,
    GateKind::OAI21,        GateKind::P_NAND2_NOR2, GateKind::P_AOI21_OAI21, GateKind::P_AND2_OR2,
    GateKind::P_AND3_OR3,   GateKind::P_AO21_OA21, GateKind::P_AND3_OA21, GateKind::P_AND3_AO21,
    GateKind::P_OR3_OA21,   GateKind::P_OR3_AO21,
};

inline constexpr std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::INV: return "INV";
        case GateKind::NAND2: return "NAND2";
        case GateKind::NOR2: return "NOR2";
        case GateKind::AOI21: return "AOI21";
        case GateKind::OAI21: return "OAI21";
        case GateKind::P_NAND2_NOR2: return "P_NAND2_NOR2";
        case GateKind::P_AOI21_OAI21: return "P_AOI21_OAI21";
        case GateKind::P_AND2_OR2: return "P_AND2_OR2";
        case GateKind::P_AND3_OR3: return "P_AND3_OR3";
        case GateKind::P_AO21_OA21: return "P_AO21_OA21";
        case GateKind::P_AND3_OA21: return "P_AND3_OA21";
        case GateKind::P_AND3_AO21: return "P_AND3_AO21";
        case GateKind::P_OR3_OA21: return "P_OR3_OA21";
        case GateKind::P_OR3_AO21: return "P_OR3_AO21";
    }
    return "?";
}

inline std::optional<GateKind> gate_kind_from_string(std::string_view name) {
    for (GateKind k : all_gate_kinds)
        if (to_string(k) == name) return k;
    return std::nullopt;
}

inline constexpr bool is_polymorphic(GateKind kind) {
    return to_string(kind).starts_with("P_");
}

struct GateSpec {
    GateKind kind = GateKind::INV;
    std::vector<int> input_weights;  // unit-coupling multiples, data inputs in order
    int ct_weight = 0;               // control aggressor; 0 for non-polymorphic cells
    int margin_k = 0;                // fires when rising weight >= margin_k; 0 for INV
    bool inverting = true;           // single inverter stage; false adds the second stage
    int transistor_count = 0;

    [[nodiscard]] bool has_victim() const { return kind != GateKind::INV; }

    /// Number of data inputs (INV has one but no coupling weights).
    [[nodiscard]] std::size_t arity() const { return has_victim() ? input_weights.size() : 1; }

    /// Data weights followed by the control weight when present.
    [[nodiscard]] std::vector<int> aggressor_weights() const {
        std::vector<int> w = input_weights;
        if (ct_weight > 0) w.push_back(ct_weight);
        return w;
    }

    [[nodiscard]] DriveVector aggressor_drive(const std::vector<bool>& inputs, bool ct) const {
        DriveVector d(inputs.begin(), inputs.end());
        if (ct_weight > 0) d.push_back(ct);
        return d;
    }
};

/// Transistors per cell: discharge device + inverter (3), plus an output inverter
/// for non-inverting cells (5); a plain inverter is 2.
inline constexpr int transistor_count(GateKind kind) {
    switch (kind) {
        case GateKind::INV: return 2;
        case GateKind::NAND2:
        case GateKind::NOR2:
        case GateKind::AOI21:
        case GateKind::OAI21:
        case GateKind::P_NAND2_NOR2:
        case GateKind::P_AOI21_OAI21: return 3;
        default: return 5;
    }
}

inline const GateSpec& spec_of(GateKind kind) {
    struct Row {
        std::vector<int> w;
        int ct;
        int k;
        bool inverting;
    };
    auto make = [](GateKind k, Row r) {
        return GateSpec{k, std::move(r.w), r.ct, r.k, r.inverting, transistor_count(k)};
    };
    // Order matches all_gate_kinds.
    static const std::array<GateSpec, 14> table = {
        make(GateKind::INV, {{}, 0, 0, true}),
        make(GateKind::NAND2, {{1, 1}, 0, 2, true}),
        make(GateKind::NOR2, {{1, 1}, 0, 1, true}),
        make(GateKind::AOI21, {{1, 1, 2}, 0, 2, true}),
        make(GateKind::OAI21, {{1, 1, 2}, 0, 3, true}),
        make(GateKind::P_NAND2_NOR2, {{1, 1}, 1, 2, true}),
        make(GateKind::P_AOI21_OAI21, {{1, 1, 2}, 1, 3, true}),
        make(GateKind::P_AND2_OR2, {{1, 1}, 1, 2, false}),
        make(GateKind::P_AND3_OR3, {{1, 1, 1}, 2, 3, false}),
        make(GateKind::P_AO21_OA21, {{1, 1, 2}, 1, 3, false}),
        make(GateKind::P_AND3_OA21, {{1, 1, 2}, 1, 4, false}),
        make(GateKind::P_AND3_AO21, {{1, 1, 2}, 2, 4, false}),
        make(GateKind::P_OR3_OA21, {{1, 1, 2}, 2, 3, false}),
        make(GateKind::P_OR3_AO21, {{1, 1, 2}, 1, 2, false}),
    };
    return table[static_cast<std::size_t>(kind)];
}

inline std::size_t arity(GateKind kind) { return spec_of(kind).arity(); }

/// Whether the victim's first inverter flips. Meaningless for INV.
inline bool gate_fires(const GateSpec& spec, const std::vector<bool>& inputs, bool ct) {
    if (inputs.size() != spec.arity())
        throw contract_error(std::string(to_string(spec.kind)) + " expects " + std::to_string(spec.arity()) +
                             " inputs, got " + std::to_string(inputs.size()));
    if (!spec.has_victim()) throw contract_error("INV has no victim net");
    return behavioral_fire(spec.aggressor_weights(), spec.aggressor_drive(inputs, ct), spec.margin_k);
}

inline bool evaluate_gate(const GateSpec& spec, const std::vector<bool>& inputs, bool ct) {
    if (!spec.has_victim()) {
        if (inputs.size() != 1) throw contract_error("INV expects 1 input");
        return !inputs[0];
    }
    const bool fire = gate_fires(spec, inputs, ct);
    return spec.inverting ? !fire : fire;
}

using TruthFunction = std::function<bool(const std::vector<bool>&)>;

/// Textbook function of a cell in the given control mode. Non-polymorphic cells ignore ct.
inline TruthFunction boolean_reference(GateKind kind, bool ct) {
    using V = const std::vector<bool>&;
    auto and2 = [](V x) { return x[0] && x[1]; };
    auto or2 = [](V x) { return x[0] || x[1]; };
    auto and3 = [](V x) { return x[0] && x[1] && x[2]; };
    auto or3 = [](V x) { return x[0] || x[1] || x[2]; };
    auto ao21 = [](V x) { return (x[0] && x[1]) || x[2]; };
    auto oa21 = [](V x) { return (x[0] || x[1]) && x[2]; };
    auto negate = [](TruthFunction f) -> TruthFunction { return [f](V x) { return !f(x); }; };

    switch (kind) {
        case GateKind::INV: return [](V x) { return !x[0]; };
        case GateKind::NAND2: return negate(and2);
        case GateKind::NOR2: return negate(or2);
        case GateKind::AOI21: return negate(ao21);
        case GateKind::OAI21: return negate(oa21);
        case GateKind::P_NAND2_NOR2: return ct ? negate(or2) : negate(and2);
        case GateKind::P_AOI21_OAI21: return ct ? negate(ao21) : negate(oa21);
        case GateKind::P_AND2_OR2: return ct ? TruthFunction(or2) : TruthFunction(and2);
        case GateKind::P_AND3_OR3: return ct ? TruthFunction(or3) : TruthFunction(and3);
        case GateKind::P_AO21_OA21: return ct ? TruthFunction(ao21) : TruthFunction(oa21);
        case GateKind::P_AND3_OA21: return ct ? TruthFunction(oa21) : TruthFunction(and3);
        case GateKind::P_AND3_AO21: return ct ? TruthFunction(ao21) : TruthFunction(and3);
        case GateKind::P_OR3_OA21: return ct ? TruthFunction(or3) : TruthFunction(oa21);
        case GateKind::P_OR3_AO21: return ct ? TruthFunction(or3) : TruthFunction(ao21);
    }
    throw contract_error("unknown gate kind");
}

/// Name of the function a cell realizes in the given mode, e.g. "OA21" for P_AO21_OA21 at ct=0.
inline std::string_view mode_name(GateKind kind, bool ct) {
    switch (kind) {
        case GateKind::INV: return "INV";
        case GateKind::NAND2: return "NAND2";
        case GateKind::NOR2: return "NOR2";
        case GateKind::AOI21: return "AOI21";
        case GateKind::OAI21: return "OAI21";
        case GateKind::P_NAND2_NOR2: return ct ? "NOR2" : "NAND2";
        case GateKind::P_AOI21_OAI21: return ct ? "AOI21" : "OAI21";
        case GateKind::P_AND2_OR2: return ct ? "OR2" : "AND2";
        case GateKind::P_AND3_OR3: return ct ? "OR3" : "AND3";
        case GateKind::P_AO21_OA21: return ct ? "AO21" : "OA21";
        case GateKind::P_AND3_OA21: return ct ? "OA21" : "AND3";
        case GateKind::P_AND3_AO21: return ct ? "AO21" : "AND3";
        case GateKind::P_OR3_OA21: return ct ? "OR3" : "OA21";
        case GateKind::P_OR3_AO21: return ct ? "OR3" : "AO21";
    }
    return "?";
}

}  // namespace ctlogic

#endif  // CTLOGIC_GATES_HPP
