#ifndef CTLOGIC_TABLE2_HPP
#define CTLOGIC_TABLE2_HPP

// Published transistor counts for polymorphic cells in four technologies, and
// the reduction achieved by the crosstalk-polymorphic implementation.

#include <array>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ctlogic/gates.hpp"
#include "ctlogic/netlist.hpp"
#include "ctlogic/verify.hpp"

namespace ctlogic {

struct EvolvedCount {
    int count = 0;
    std::string condition;  // display only, e.g. "(3.3/1.8)"
};

struct Table2Row {
    std::string name;
    int cmos = 0;
    // control-voltage, temperature and supply-voltage evolved variants
    std::array<std::optional<EvolvedCount>, 3> evolved;
    int ambipolar = 0;
    int ctp = 0;                      // crosstalk-polymorphic, as published
    std::optional<GateKind> cell;     // empty for the multiplier-sorter row
};

inline constexpr std::array<const char*, 5> table2_baselines = {
    "cmos", "evolved", "evolved_temperature", "evolved_supply", "ambipolar"};

inline const std::vector<Table2Row>& table2_data() {
    using K = GateKind;
    auto ev = [](int c, std::string cond = {}) { return std::optional<EvolvedCount>(EvolvedCount{c, std::move(cond)}); };
    static const std::vector<Table2Row> rows = {
        {"NAND-NOR", 14, {ev(11, "(0/0.9)"), ev(8), ev(6, "(3.3/1.8)")}, 4, 3, K::P_NAND2_NOR2},
        {"AOI-OAI", 18, {ev(21), ev(14), ev(14)}, 6, 3, K::P_AOI21_OAI21},
        {"AND2-OR2", 18, {ev(10, "(3.3/0)"), ev(6, "(27/125\xC2\xB0" "C)"), ev(8, "(1.2/3)")}, 6, 5, K::P_AND2_OR2},
        {"AND3-OR3", 22, {ev(20), ev(12), ev(14)}, 6, 5, K::P_AND3_OR3},
        {"AO21-OA21", 22, {ev(21), ev(12), ev(16)}, 8, 5, K::P_AO21_OA21},
        {"AND3-AO21", 22, {ev(16), ev(12), ev(14)}, 12, 5, K::P_AND3_AO21},
        {"AND3-OA21", 22, {ev(16), ev(12), ev(14)}, 12, 5, K::P_AND3_OA21},
        {"OR3-AO21", 22, {ev(16), ev(12), ev(14)}, 12, 5, K::P_OR3_AO21},
        {"OR3-OA21", 22, {ev(16), ev(12), ev(14)}, 12, 5, K::P_OR3_OA21},
        {"Multiplier-Sorter", 146, {ev(138), std::nullopt, std::nullopt}, 122, 88, std::nullopt},
    };
    return rows;
}

/// (1 - ctp/baseline) * 100, rounded half away from zero.
inline int reduction_percent(int ctp, int baseline) {
    if (baseline <= 0) throw contract_error("baseline transistor count must be positive");
    return static_cast<int>(std::lround((1.0 - static_cast<double>(ctp) / baseline) * 100.0));
}

struct Reduction {
    std::string row;
    std::string baseline;
    int ctp = 0;
    int baseline_count = 0;
    int reduction_pct = 0;
};

struct ReductionReport {
    std::vector<Reduction> entries;

    [[nodiscard]] std::optional<Reduction> find(std::string_view row, std::string_view baseline) const {
        for (const auto& e : entries)
            if (e.row == row && e.baseline == baseline) return e;
        return std::nullopt;
    }
};

inline ReductionReport table2_report() {
    ReductionReport report;
    for (const auto& r : table2_data()) {
        auto add = [&](const char* baseline, int count) {
            report.entries.push_back({r.name, baseline, r.ctp, count, reduction_percent(r.ctp, count)});
        };
        add("cmos", r.cmos);
        for (std::size_t v = 0; v < r.evolved.size(); ++v)
            if (r.evolved[v]) add(table2_baselines[1 + v], r.evolved[v]->count);
        add("ambipolar", r.ambipolar);
    }
    return report;
}

/// The CT-P column recomputed from the cell cost model (or from a netlist for
/// the multiplier-sorter row).
struct CtpCheck {
    std::string row;
    int published = 0;
    int computed = 0;
    bool from_cell = false;  // false: multiplier-sorter, compared for information only
    [[nodiscard]] bool matches() const { return published == computed; }
};

inline std::vector<CtpCheck> table2_ctp_check(const Netlist& multiplier = multiplier_sorter()) {
    std::vector<CtpCheck> out;
    for (const auto& r : table2_data()) {
        if (r.cell)
            out.push_back({r.name, r.ctp, transistor_count(*r.cell), true});
        else
            out.push_back({r.name, r.ctp, transistor_total(multiplier).total, false});
    }
    return out;
}

inline std::string render_table2(const std::vector<CtpCheck>& checks) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "row" << std::right << std::setw(6) << "CMOS" << std::setw(8) << "EvoV"
       << std::setw(8) << "EvoT" << std::setw(8) << "EvoS" << std::setw(7) << "Ambi" << std::setw(6) << "CT-P"
       << std::setw(10) << "computed" << "  status\n";
    const auto& rows = table2_data();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        os << std::left << std::setw(18) << r.name << std::right << std::setw(6) << r.cmos;
        for (const auto& e : r.evolved) os << std::setw(8) << (e ? std::to_string(e->count) : std::string("-"));
        os << std::setw(7) << r.ambipolar << std::setw(6) << r.ctp << std::setw(10) << checks[i].computed << "  ";
        if (checks[i].from_cell)
            os << (checks[i].matches() ? "ok" : "MISMATCH");
        else
            os << (checks[i].matches() ? "ok" : "differs (own netlist, informational)");
        os << '\n';
    }
    return os.str();
}

inline std::string render_reductions(const ReductionReport& report) {
    std::ostringstream os;
    os << std::left << std::setw(18) << "row" << std::setw(21) << "baseline" << std::right << std::setw(5) << "ctp"
       << std::setw(10) << "baseline" << std::setw(11) << "reduction\n";
    for (const auto& e : report.entries)
        os << std::left << std::setw(18) << e.row << std::setw(21) << e.baseline << std::right << std::setw(5) << e.ctp
           << std::setw(10) << e.baseline_count << std::setw(9) << e.reduction_pct << "%\n";
    return os.str();
}

}  // namespace ctlogic

#endif  // CTLOGIC_TABLE2_HPP
