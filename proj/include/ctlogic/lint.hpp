#ifndef CTLOGIC_LINT_HPP
#define CTLOGIC_LINT_HPP

// Structural checks for netlists and the deterministic evaluation order.
//
//   R1 cycle            R4 multiple drivers
//   R2 arity            R5 undriven net
//   R3 monotonicity     R6 missing control
//
// R3 is the crosstalk-specific rule: every CT gate input must sit at 0 at the
// end of the discharge phase, so that a logic 1 in evaluation is a real
// 0->1 transition. Inverting CT outputs idle high and must cross a pass-gate.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctlogic/errors.hpp"
#include "ctlogic/netlist.hpp"

namespace ctlogic {

enum class Severity { Error, Warning };

inline constexpr std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

struct LintIssue {
    std::string code;  // "R1" .. "R6"
    Severity severity = Severity::Error;
    std::string message;
    std::vector<std::string> ids;

    bool operator==(const LintIssue&) const = default;
};

inline std::string format_issue(const LintIssue& issue) {
    std::ostringstream os;
    os << to_string(issue.severity) << ' ' << issue.code << ':';
    for (std::size_t i = 0; i < issue.ids.size(); ++i) os << (i ? "," : " ") << issue.ids[i];
    os << ": " << issue.message;
    return os.str();
}

inline bool has_errors(const std::vector<LintIssue>& issues) {
    return std::any_of(issues.begin(), issues.end(), [](const LintIssue& i) { return i.severity == Severity::Error; });
}

namespace detail {

/// Who drives each net. Primary inputs and the control line count as drivers.
struct DriverMap {
    std::unordered_map<std::string, std::vector<std::string>> by_net;       // net -> driver labels
    std::unordered_map<std::string, std::vector<std::size_t>> elements;    // net -> element positions

    explicit DriverMap(const Netlist& n, const std::vector<ElementRef>& order) {
        for (const auto& in : n.inputs) by_net[in].push_back("input:" + in);
        if (n.control) by_net[*n.control].push_back("control:" + *n.control);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto& out = n.output_of(order[i]);
            by_net[out].push_back(n.id_of(order[i]));
            elements[out].push_back(i);
        }
    }

    [[nodiscard]] bool driven(const std::string& net) const { return by_net.contains(net); }
};

struct Ordering {
    std::vector<ElementRef> order;       // topological, ties by declaration
    std::vector<std::string> cycle_nets; // empty when acyclic
};

inline Ordering order_elements(const Netlist& n) {
    const auto decl = n.elements_in_declaration_order();
    const DriverMap drivers(n, decl);
    const std::size_t count = decl.size();

    std::vector<std::vector<std::size_t>> preds(count), succs(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (const auto& in : n.inputs_of(decl[i])) {
            auto it = drivers.elements.find(in);
            if (it == drivers.elements.end()) continue;
            for (std::size_t p : it->second) {
                preds[i].push_back(p);
                succs[p].push_back(i);
            }
        }
    }

    std::vector<std::size_t> pending(count);
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < count; ++i) {
        pending[i] = preds[i].size();
        if (pending[i] == 0) ready.push(i);
    }
    Ordering result;
    std::vector<bool> done(count, false);
    while (!ready.empty()) {
        const std::size_t i = ready.top();
        ready.pop();
        done[i] = true;
        result.order.push_back(decl[i]);
        for (std::size_t s : succs[i])
            if (--pending[s] == 0) ready.push(s);
    }
    if (result.order.size() == count) return result;

    // Every unfinished element has an unfinished predecessor; walk back until a repeat.
    std::size_t cur = 0;
    while (done[cur]) ++cur;
    std::vector<std::size_t> path;
    std::vector<std::ptrdiff_t> where(count, -1);
    while (where[cur] < 0) {
        where[cur] = static_cast<std::ptrdiff_t>(path.size());
        path.push_back(cur);
        for (std::size_t p : preds[cur]) {
            if (!done[p]) {
                cur = p;
                break;
            }
        }
    }
    std::vector<std::size_t> cycle(path.begin() + where[cur], path.end());
    std::reverse(cycle.begin(), cycle.end());
    for (std::size_t e : cycle) result.cycle_nets.push_back(n.output_of(decl[e]));
    return result;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace detail

/// Evaluation order: every element after all of its drivers, ties broken by declaration order.
inline std::vector<ElementRef> topo_order(const Netlist& n) {
    auto ordering = detail::order_elements(n);
    if (!ordering.cycle_nets.empty())
        throw netlist_error("combinational cycle through nets " + detail::join(ordering.cycle_nets, " -> "));
    return std::move(ordering.order);
}

/// Value each net holds at the end of a discharge phase. Empty for nets
/// whose driver is missing or sits on a cycle.
inline std::unordered_map<std::string, bool> discharge_levels(const Netlist& n) {
    std::unordered_map<std::string, bool> level;
    for (const auto& in : n.inputs) level[in] = false;
    if (n.control) level[*n.control] = false;
    for (const auto& r : detail::order_elements(n).order) {
        const auto& out = n.output_of(r);
        if (r.type == ElementRef::Type::Pass) {
            level[out] = false;
            continue;
        }
        const auto& g = n.gates[r.index];
        if (g.kind != GateKind::INV) {
            level[out] = spec_of(g.kind).inverting;
        } else if (g.input_nets.size() == 1) {
            auto it = level.find(g.input_nets[0]);
            if (it != level.end()) level[out] = !it->second;
        }
    }
    return level;
}

inline std::vector<LintIssue> lint(const Netlist& n) {
    std::vector<LintIssue> issues;
    const auto decl = n.elements_in_declaration_order();
    const detail::DriverMap drivers(n, decl);

    // R1
    const auto ordering = detail::order_elements(n);
    if (!ordering.cycle_nets.empty())
        issues.push_back({"R1", Severity::Error,
                          "combinational cycle through nets " + detail::join(ordering.cycle_nets, " -> "),
                          ordering.cycle_nets});

    // R2
    for (const auto& r : decl) {
        if (r.type != ElementRef::Type::Gate) continue;
        const auto& g = n.gates[r.index];
        const std::size_t want = arity(g.kind);
        if (g.input_nets.size() != want)
            issues.push_back({"R2", Severity::Error,
                              std::string(to_string(g.kind)) + " takes " + std::to_string(want) + " inputs, " +
                                  std::to_string(g.input_nets.size()) + " given",
                              {g.id}});
    }

    // R3
    const auto level = discharge_levels(n);
    auto driver_label = [&](const std::string& net) {
        auto it = drivers.by_net.find(net);
        return it == drivers.by_net.end() ? std::string("?") : it->second.front();
    };
    for (const auto& r : decl) {
        if (r.type == ElementRef::Type::Pass) {
            const auto& p = n.passgates[r.index];
            auto it = level.find(p.source_net);
            if (it != level.end() && !it->second)
                issues.push_back({"R3", Severity::Warning,
                                  "pass-gate source '" + p.source_net + "' already idles low; pass-gate is redundant",
                                  {p.id, p.source_net}});
            continue;
        }
        const auto& g = n.gates[r.index];
        if (g.kind == GateKind::INV) continue;
        for (const auto& in : g.input_nets) {
            auto it = level.find(in);
            if (it != level.end() && it->second)
                issues.push_back({"R3", Severity::Error,
                                  "input '" + in + "' of " + std::string(to_string(g.kind)) + " '" + g.id +
                                      "' idles high during discharge (driven by '" + driver_label(in) +
                                      "'); insert a pass-gate",
                                  {g.id, in}});
        }
    }

    // R4
    std::map<std::string, std::vector<std::string>> multi;
    for (const auto& [net, labels] : drivers.by_net)
        if (labels.size() > 1) multi.emplace(net, labels);
    for (const auto& [net, labels] : multi) {
        std::vector<std::string> ids{net};
        ids.insert(ids.end(), labels.begin(), labels.end());
        issues.push_back({"R4", Severity::Error, "net '" + net + "' has " + std::to_string(labels.size()) +
                                                     " drivers: " + detail::join(labels, ", "),
                          ids});
    }

    // R5
    for (const auto& r : decl)
        for (const auto& in : n.inputs_of(r))
            if (!drivers.driven(in))
                issues.push_back({"R5", Severity::Error, "net '" + in + "' read by '" + n.id_of(r) + "' has no driver",
                                  {in, n.id_of(r)}});
    for (const auto& out : n.outputs)
        if (!drivers.driven(out))
            issues.push_back({"R5", Severity::Error, "output '" + out + "' has no driver", {out}});

    // R6
    if (!n.control) {
        for (const auto& g : n.gates)
            if (is_polymorphic(g.kind))
                issues.push_back({"R6", Severity::Error,
                                  std::string(to_string(g.kind)) + " '" + g.id + "' needs a control net; none declared",
                                  {g.id}});
    }

    std::stable_sort(issues.begin(), issues.end(),
                     [](const LintIssue& a, const LintIssue& b) { return a.code < b.code; });
    return issues;
}

}  // namespace ctlogic

#endif  // CTLOGIC_LINT_HPP
