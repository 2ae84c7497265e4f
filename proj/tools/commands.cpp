#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ctlogic/ctlogic.hpp"
#include "ctlogic/report_json.hpp"

namespace ctlogic::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes via a temporary file so a failed run never leaves a partial file behind.
void write_file_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot write '" + path + "'");
        out << content;
        if (!out.flush()) throw UsageError("cannot write '" + path + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw UsageError("cannot write '" + path + "'");
    }
}

Netlist load_netlist(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const parse_error& e) {
        throw UsageError(path + ":" + e.what());
    }
}

struct AnalogFlags {
    double vdd = AnalogParams{}.vdd;
    double threshold_ratio = AnalogParams{}.threshold_ratio;
    double unit_coupling = AnalogParams{}.unit_coupling_ff;
    std::optional<double> parasitic;

    void attach(CLI::App* app) {
        app->add_option("--vdd", vdd, "Supply voltage (V)");
        app->add_option("--threshold-ratio", threshold_ratio, "Inverter switching point as a fraction of vdd");
        app->add_option("--unit-coupling", unit_coupling, "Value of one coupling unit (fF)");
        app->add_option("--parasitic", parasitic, "Explicit victim parasitic per gate (fF); default AUTO");
    }

    [[nodiscard]] AnalogParams params() const {
        AnalogParams p;
        p.vdd = vdd;
        p.threshold_ratio = threshold_ratio;
        p.unit_coupling_ff = unit_coupling;
        p.parasitic_ff = parasitic;
        p.validate();
        return p;
    }
};

std::string weights_text(const GateSpec& s) {
    std::string w;
    for (std::size_t i = 0; i < s.input_weights.size(); ++i) w += (i ? "," : "") + std::to_string(s.input_weights[i]);
    return w;
}

// ---------------------------------------------------------------- lint

int cmd_lint(const std::string& path, bool json, std::ostream& out) {
    const Netlist n = load_netlist(path);
    const auto issues = lint(n);
    if (json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& i : issues) arr.push_back(to_json(i));
        const auto errors = std::count_if(issues.begin(), issues.end(),
                                          [](const LintIssue& i) { return i.severity == Severity::Error; });
        out << nlohmann::ordered_json{{"circuit", n.name}, {"issues", arr}, {"errors", errors}}.dump(2) << '\n';
    } else {
        for (const auto& i : issues) out << format_issue(i) << '\n';
        out << issues.size() << (issues.size() == 1 ? " issue" : " issues") << '\n';
    }
    return has_errors(issues) ? exit_failure : exit_ok;
}

// ---------------------------------------------------------------- sim

struct SimArgs {
    std::string netlist;
    std::string stimulus;
    std::string model = "behavioral";
    std::string vcd;
    bool json = false;
    bool skip_lint = false;
    AnalogFlags analog;
};

int cmd_sim(const SimArgs& a, std::ostream& out, std::ostream& err) {
    const Netlist n = load_netlist(a.netlist);
    Stimulus stim;
    try {
        stim = parse_stimulus(read_file(a.stimulus));
    } catch (const parse_error& e) {
        throw UsageError(a.stimulus + ":" + e.what());
    }
    const auto model = model_from_string(a.model);
    if (!model) throw UsageError("unknown model '" + a.model + "' (behavioral|analog)");

    const auto issues = lint(n);
    if (has_errors(issues) && !a.skip_lint) {
        for (const auto& i : issues) err << format_issue(i) << '\n';
        err << "lint failed; not simulating (use --skip-lint to force)\n";
        return exit_failure;
    }

    SimConfig cfg;
    cfg.model = *model;
    cfg.analog = a.analog.params();
    cfg.hazard_checking = true;
    cfg.enforce_lint = !a.skip_lint;

    Trace trace;
    try {
        trace = run(n, stim, cfg);
    } catch (const contract_error& e) {
        throw UsageError(e.what());
    } catch (const netlist_error& e) {
        err << e.what() << '\n';
        return exit_failure;
    } catch (const parameter_error& e) {
        err << e.what() << '\n';
        return exit_failure;
    }

    if (!a.vcd.empty()) write_file_atomically(a.vcd, export_vcd(trace, n));

    if (a.json) {
        out << to_json(trace, n, stim).dump(2) << '\n';
    } else {
        out << "circuit " << n.name << " model " << to_string(trace.model) << " cycles " << trace.cycles.size() << '\n';
        out << "# cycle inputs ct outputs(";
        for (std::size_t i = 0; i < n.outputs.size(); ++i) out << (i ? " " : "") << n.outputs[i];
        out << ")\n";
        for (std::size_t c = 0; c < trace.cycles.size(); ++c) {
            std::string in;
            for (bool b : stim.cycles[c].inputs) in += b ? '1' : '0';
            out << c << ' ' << (in.empty() ? "-" : in) << ' ' << (stim.cycles[c].ct ? 1 : 0) << ' '
                << trace.bits(c, Phase::Evaluate, n.outputs) << '\n';
        }
        for (const auto& h : trace.hazards)
            out << "hazard cycle " << h.cycle << " net " << h.net << " gate " << h.gate << '\n';
        out << trace.hazards.size() << " hazards\n";
    }
    return trace.hazards.empty() ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- check

struct ModeResult {
    std::string label;
    TruthTable table;
    EquivalenceReport report;
};

void print_mode(const ModeResult& m, std::ostream& out) {
    out << m.label << ' ' << (m.report.checked - m.report.mismatches.size()) << '/' << m.report.checked << ' '
        << (m.report.pass ? "pass" : "FAIL") << '\n';
    for (const auto& mm : m.report.mismatches)
        out << "  mismatch input " << to_bits(mm.input, m.table.inputs) << " expected "
            << to_bits(mm.expected, m.table.outputs) << " got " << to_bits(mm.actual, m.table.outputs) << '\n';
}

int report_modes(const std::vector<ModeResult>& modes, bool json, std::ostream& out) {
    std::size_t checked = 0, passed = 0;
    bool all = true;
    for (const auto& m : modes) {
        checked += m.report.checked;
        passed += m.report.checked - m.report.mismatches.size();
        all = all && m.report.pass;
    }
    if (json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& m : modes) {
            auto j = to_json(m.report, m.table.inputs, m.table.outputs);
            j["mode"] = m.label;
            arr.push_back(j);
        }
        out << nlohmann::ordered_json{{"pass", all}, {"vectors", checked}, {"passed", passed}, {"modes", arr}}.dump(2)
            << '\n';
    } else {
        for (const auto& m : modes) print_mode(m, out);
        out << passed << '/' << checked << " vectors pass\n";
    }
    return all ? exit_ok : exit_failure;
}

ModeResult check_mode(const Netlist& n, bool ct, const Oracle& oracle, std::string label) {
    ModeResult m{std::move(label), exhaustive_truth(n, ct), {}};
    if (m.table.inputs != oracle.inputs || m.table.outputs != oracle.outputs)
        throw UsageError("netlist '" + n.name + "' has " + std::to_string(m.table.inputs) + " inputs and " +
                         std::to_string(m.table.outputs) + " outputs; oracle expects " +
                         std::to_string(oracle.inputs) + " and " + std::to_string(oracle.outputs));
    m.report = check_equiv(m.table, oracle);
    return m;
}

std::vector<ModeResult> check_multiplier_sorter(const Netlist& n) {
    return {check_mode(n, false, multiplier_sorter_oracle(false), "ct=0 multiplier"),
            check_mode(n, true, multiplier_sorter_oracle(true), "ct=1 sorter")};
}

std::vector<ModeResult> check_gate(const Netlist& n, GateKind kind) {
    std::vector<ModeResult> modes;
    for (bool ct : {false, true})
        modes.push_back(check_mode(n, ct, gate_oracle(kind, ct),
                                   std::string(to_string(kind)) + " ct=" + (ct ? "1 " : "0 ") +
                                       std::string(mode_name(kind, ct))));
    return modes;
}

struct CheckArgs {
    std::string netlist;
    std::string builtin;
    std::string oracle;
    bool all_gates = false;
    bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    const int sources = (a.netlist.empty() ? 0 : 1) + (a.builtin.empty() ? 0 : 1) + (a.all_gates ? 1 : 0);
    if (sources != 1) throw UsageError("check needs exactly one of <netlist>, --builtin, --all-gates");

    if (a.all_gates) {
        std::vector<ModeResult> modes;
        for (GateKind k : all_gate_kinds)
            for (auto& m : check_gate(gate_cell(k), k)) modes.push_back(std::move(m));
        return report_modes(modes, a.json, out);
    }
    if (!a.builtin.empty()) {
        if (a.builtin != "multiplier-sorter") throw UsageError("unknown builtin '" + a.builtin + "'");
        return report_modes(check_multiplier_sorter(multiplier_sorter()), a.json, out);
    }

    const Netlist n = load_netlist(a.netlist);
    if (a.oracle.empty())
        throw UsageError("no oracle known for '" + a.netlist +
                         "'; pass --oracle multiplier-sorter or --oracle gate:<KIND>");
    const auto lint_issues = lint(n);
    if (has_errors(lint_issues)) {
        for (const auto& i : lint_issues) out << format_issue(i) << '\n';
        return exit_failure;
    }
    if (a.oracle == "multiplier-sorter") return report_modes(check_multiplier_sorter(n), a.json, out);
    if (a.oracle.starts_with("gate:")) {
        const auto kind = gate_kind_from_string(a.oracle.substr(5));
        if (!kind) throw UsageError("unknown gate kind in oracle '" + a.oracle + "'");
        return report_modes(check_gate(n, *kind), a.json, out);
    }
    throw UsageError("unknown oracle '" + a.oracle + "' (multiplier-sorter | gate:<KIND>)");
}

// ---------------------------------------------------------------- margins

int cmd_margins(const std::string& gate, bool all, const AnalogFlags& flags, bool json, std::ostream& out) {
    if (all == !gate.empty()) throw UsageError("margins needs exactly one of --gate KIND, --all");
    std::vector<GateKind> kinds;
    if (all) {
        kinds.assign(all_gate_kinds.begin(), all_gate_kinds.end());
    } else {
        const auto k = gate_kind_from_string(gate);
        if (!k) throw UsageError("unknown gate kind '" + gate + "'");
        kinds.push_back(*k);
    }
    const AnalogParams params = flags.params();

    bool feasible = true;
    auto rows = nlohmann::ordered_json::array();
    std::ostringstream text;
    text << std::left << std::setw(15) << "kind" << std::setw(8) << "weights" << std::right << std::setw(3) << "ct"
         << std::setw(3) << "k" << std::setw(11) << "Cpar_fF" << std::setw(11) << "fire_min" << std::setw(13)
         << "nonfire_max" << std::setw(10) << "low" << std::setw(10) << "high" << "  feasible consistent\n";
    text << std::fixed << std::setprecision(4);
    for (GateKind k : kinds) {
        const auto& s = spec_of(k);
        if (!s.has_victim()) {
            text << std::left << std::setw(15) << to_string(k) << "no victim net\n";
            rows.push_back({{"kind", to_string(k)}, {"victim", false}});
            continue;
        }
        const auto m = noise_margin(s.aggressor_weights(), s.margin_k, params);
        const bool consistent = consistency_check(s.aggressor_weights(), s.margin_k, params);
        feasible = feasible && m.feasible && consistent;
        text << std::left << std::setw(15) << to_string(k) << std::setw(8) << weights_text(s) << std::right
             << std::setw(3) << s.ct_weight << std::setw(3) << s.margin_k << std::setw(11) << m.parasitic_ff
             << std::setw(11) << m.fire_min_voltage << std::setw(13) << m.nonfire_max_voltage << std::setw(10)
             << m.low_margin << std::setw(10) << m.high_margin << "  " << std::left << std::setw(9)
             << (m.feasible ? "yes" : "NO") << (consistent ? "yes" : "NO") << '\n';
        auto j = to_json(m);
        j["kind"] = to_string(k);
        j["victim"] = true;
        j["consistent"] = consistent;
        rows.push_back(j);
    }
    if (json)
        out << nlohmann::ordered_json{{"params",
                                       {{"vdd", params.vdd},
                                        {"threshold_ratio", params.threshold_ratio},
                                        {"unit_coupling_ff", params.unit_coupling_ff},
                                        {"parasitic", params.parasitic_ff ? nlohmann::ordered_json(*params.parasitic_ff)
                                                                           : nlohmann::ordered_json("auto")}}},
                                      {"gates", rows},
                                      {"feasible", feasible}}
                   .dump(2)
            << '\n';
    else
        out << text.str();
    return feasible ? exit_ok : exit_failure;
}

// ---------------------------------------------------------------- bench

int cmd_bench(bool json, std::ostream& out) {
    const Netlist ms = multiplier_sorter();
    const auto checks = table2_ctp_check(ms);
    const auto reductions = table2_report();
    const auto count = transistor_total(ms);
    const bool cells_match =
        std::all_of(checks.begin(), checks.end(), [](const CtpCheck& c) { return !c.from_cell || c.matches(); });

    if (json) {
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < table2_data().size(); ++i) {
            const auto& r = table2_data()[i];
            auto evolved = nlohmann::ordered_json::array();
            for (const auto& e : r.evolved)
                evolved.push_back(e ? nlohmann::ordered_json{{"count", e->count}, {"condition", e->condition}}
                                    : nlohmann::ordered_json(nullptr));
            rows.push_back({{"row", r.name},
                            {"cmos", r.cmos},
                            {"evolved", evolved},
                            {"ambipolar", r.ambipolar},
                            {"ctp", r.ctp},
                            {"ctp_computed", checks[i].computed},
                            {"ctp_matches", checks[i].matches()}});
        }
        out << nlohmann::ordered_json{{"table2", rows},
                                      {"reductions", to_json(reductions)},
                                      {"multiplier_sorter", to_json(count)},
                                      {"cells_match", cells_match}}
                   .dump(2)
            << '\n';
    } else {
        out << render_table2(checks) << '\n' << render_reductions(reductions) << '\n';
        out << "built-in multiplier-sorter: " << count.gates << " gates (" << count.ct_gates << " CT, "
            << count.polymorphic_gates << " polymorphic, " << count.inverters << " INV), " << count.passgates
            << " pass-gates, " << count.total << " transistors; published 88\n";
    }
    return cells_match ? exit_ok : exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Crosstalk logic simulator and verifier", "ctlogic"};
    app.require_subcommand(1);

    std::string lint_path;
    bool lint_json = false;
    auto* lint_cmd = app.add_subcommand("lint", "Check a .ctn netlist for structural and monotonicity problems");
    lint_cmd->add_option("netlist", lint_path, "Netlist file")->required();
    lint_cmd->add_flag("--json", lint_json, "Machine-readable output");

    SimArgs sim;
    auto* sim_cmd = app.add_subcommand("sim", "Simulate a netlist over a stimulus file");
    sim_cmd->add_option("netlist", sim.netlist, "Netlist file")->required();
    sim_cmd->add_option("stimulus", sim.stimulus, "Stimulus file")->required();
    sim_cmd->add_option("--model", sim.model, "behavioral | analog");
    sim_cmd->add_option("--vcd", sim.vcd, "Write a VCD waveform");
    sim_cmd->add_flag("--json", sim.json, "Machine-readable output");
    sim_cmd->add_flag("--skip-lint", sim.skip_lint, "Simulate even if lint reports monotonicity errors");
    sim.analog.attach(sim_cmd);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Exhaustive equivalence against Boolean oracles");
    check_cmd->add_option("netlist", check.netlist, "Netlist file");
    check_cmd->add_option("--builtin", check.builtin, "Built-in design: multiplier-sorter");
    check_cmd->add_flag("--all-gates", check.all_gates, "Every library cell in both control modes");
    check_cmd->add_option("--oracle", check.oracle, "Oracle for a netlist file: multiplier-sorter | gate:<KIND>");
    check_cmd->add_flag("--json", check.json, "Machine-readable output");

    std::string margin_gate;
    bool margin_all = false, margin_json = false;
    AnalogFlags margin_flags;
    auto* margins_cmd = app.add_subcommand("margins", "Analog noise margins of library cells");
    margins_cmd->add_option("--gate", margin_gate, "Gate kind");
    margins_cmd->add_flag("--all", margin_all, "Every library cell");
    margins_cmd->add_flag("--json", margin_json, "Machine-readable output");
    margin_flags.attach(margins_cmd);

    bool bench_json = false, bench_table2 = false;
    auto* bench_cmd = app.add_subcommand("bench", "Transistor-count comparison and reduction percentages");
    bench_cmd->add_flag("--table2", bench_table2, "Technology comparison table (default)");
    bench_cmd->add_flag("--json", bench_json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (lint_cmd->parsed()) return cmd_lint(lint_path, lint_json, out);
        if (sim_cmd->parsed()) return cmd_sim(sim, out, err);
        if (check_cmd->parsed()) return cmd_check(check, out);
        if (margins_cmd->parsed()) return cmd_margins(margin_gate, margin_all, margin_flags, margin_json, out);
        if (bench_cmd->parsed()) return cmd_bench(bench_json, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const parameter_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const contract_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace ctlogic::cli
