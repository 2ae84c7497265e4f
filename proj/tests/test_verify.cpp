#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>

#include "ctlogic/errors.hpp"
#include "ctlogic/parser.hpp"
#include "ctlogic/table2.hpp"
#include "ctlogic/verify.hpp"

using namespace ctlogic;

namespace {

unsigned bits4(const char* s) {
    unsigned v = 0;
    for (; *s; ++s) v = (v << 1) | (*s == '1' ? 1u : 0u);
    return v;
}

// Sorting done the obvious way, for comparison with the threshold formulation.
unsigned sort_desc(std::array<bool, 4> b) {
    std::sort(b.begin(), b.end(), std::greater<>());
    unsigned v = 0;
    for (bool x : b) v = (v << 1) | (x ? 1u : 0u);
    return v;
}

}  // namespace

TEST(ExhaustiveTruth, Nand2Cell) {
    for (bool ct : {false, true}) {
        const auto tt = exhaustive_truth(gate_cell(GateKind::NAND2), ct);
        EXPECT_EQ(tt.rows, (std::vector<std::uint64_t>{1, 1, 1, 0}));
        EXPECT_EQ(tt.inputs, 2u);
        EXPECT_EQ(tt.outputs, 1u);
    }
}

TEST(ExhaustiveTruth, MultiplierRow) {
    const auto tt = exhaustive_truth(multiplier_sorter(), false);
    ASSERT_EQ(tt.rows.size(), 16u);
    EXPECT_EQ(tt.rows[bits4("1011")], bits4("0110"));
}

TEST(ExhaustiveTruth, ZeroInputNetlist) {
    const Netlist n = parse("circuit k\noutput y\ncontrol ct\ngate g P_AND2_OR2 ct ct -> y\n");
    const auto lo = exhaustive_truth(n, false);
    const auto hi = exhaustive_truth(n, true);
    EXPECT_EQ(lo.rows, (std::vector<std::uint64_t>{0}));
    EXPECT_EQ(hi.rows, (std::vector<std::uint64_t>{1}));
}

TEST(ExhaustiveTruth, CapRefusal) {
    EXPECT_THROW(exhaustive_truth(multiplier_sorter(), false, {}, 3), contract_error);
    try {
        exhaustive_truth(multiplier_sorter(), false, {}, 3);
    } catch (const contract_error& e) {
        EXPECT_NE(std::string(e.what()).find("cap 3"), std::string::npos);
    }
}

TEST(CheckEquiv, LibraryNand) {
    const auto r = check_equiv(exhaustive_truth(gate_cell(GateKind::NAND2), false),
                               {2, 1, [](std::uint64_t row) -> std::uint64_t { return row == 3 ? 0 : 1; }});
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.checked, 4u);
}

TEST(CheckEquiv, AndOa21AgainstAnd3) {
    const auto tt = exhaustive_truth(gate_cell(GateKind::P_AND3_OA21), true);
    const Oracle and3{3, 1, [](std::uint64_t row) -> std::uint64_t { return row == 7 ? 1 : 0; }};
    const auto r = check_equiv(tt, and3);
    EXPECT_FALSE(r.pass);
    std::vector<std::uint64_t> bad;
    for (const auto& m : r.mismatches) bad.push_back(m.input);
    // brute force: where (A+B)C and ABC differ
    std::vector<std::uint64_t> expected;
    for (std::uint64_t row = 0; row < 8; ++row) {
        const bool a = row & 4, b = row & 2, c = row & 1;
        if (((a || b) && c) != (a && b && c)) expected.push_back(row);
    }
    EXPECT_EQ(bad, expected);
    EXPECT_EQ(bad, (std::vector<std::uint64_t>{0b011, 0b101}));
    for (const auto& m : r.mismatches) {
        EXPECT_EQ(m.expected, 0u);
        EXPECT_EQ(m.actual, 1u);
    }
}

TEST(CheckEquiv, TableAgainstItself) {
    const auto tt = exhaustive_truth(multiplier_sorter(), true);
    const Oracle self{tt.inputs, tt.outputs, [&](std::uint64_t row) { return tt.rows[row]; }};
    EXPECT_TRUE(check_equiv(tt, self).pass);
}

TEST(CheckEquiv, WidthMismatch) {
    const auto tt = exhaustive_truth(gate_cell(GateKind::NAND2), false);
    EXPECT_THROW(check_equiv(tt, gate_oracle(GateKind::AOI21, false)), contract_error);
}

TEST(CheckEquiv, EveryGateCellBothModes) {
    for (GateKind k : all_gate_kinds)
        for (bool ct : {false, true}) {
            const auto r = check_equiv(exhaustive_truth(gate_cell(k), ct), gate_oracle(k, ct));
            EXPECT_TRUE(r.pass) << to_string(k) << " ct=" << ct;
            EXPECT_EQ(r.checked, std::size_t{1} << arity(k));
        }
}

TEST(ReferenceMultiplier, Examples) {
    EXPECT_EQ(reference_multiplier(0b10, 0b11), bits4("0110"));
    EXPECT_EQ(reference_multiplier(0b01, 0b01), bits4("0001"));
    EXPECT_EQ(reference_multiplier(0b00, 0b11), 0u);
    EXPECT_THROW(reference_multiplier(4, 1), contract_error);
}

TEST(ReferenceSorter, Examples) {
    EXPECT_EQ(reference_sorter({true, false, true, true}), bits4("1110"));
    EXPECT_EQ(reference_sorter({false, true, false, true}), bits4("1100"));
    EXPECT_EQ(reference_sorter({false, false, false, false}), 0u);
}

TEST(ReferenceSorter, MonotoneAndPopcountPreserving) {
    for (unsigned v = 0; v < 16; ++v) {
        const std::array<bool, 4> in{(v & 8u) != 0, (v & 4u) != 0, (v & 2u) != 0, (v & 1u) != 0};
        const unsigned out = reference_sorter(in);
        EXPECT_EQ(out, sort_desc(in));
        EXPECT_EQ(std::popcount(out), std::popcount(v));
        // non-increasing left to right: once a 0 appears no 1 follows
        bool seen_zero = false;
        for (int bit = 3; bit >= 0; --bit) {
            const bool one = (out >> bit) & 1u;
            EXPECT_FALSE(seen_zero && one) << v;
            seen_zero = seen_zero || !one;
        }
    }
}

TEST(MultiplierSorter, AllThirtyTwoVectors) {
    for (bool ct : {false, true}) {
        const auto tt = exhaustive_truth(multiplier_sorter(), ct);
        for (unsigned row = 0; row < 16; ++row) {
            const unsigned a = row >> 2, b = row & 3u;
            const unsigned want = ct ? sort_desc({(a & 2u) != 0, (a & 1u) != 0, (b & 2u) != 0, (b & 1u) != 0})
                                     : a * b;
            EXPECT_EQ(tt.rows[row], want) << "ct=" << ct << " row " << to_bits(row, 4);
        }
        EXPECT_TRUE(check_equiv(tt, multiplier_sorter_oracle(ct)).pass);
    }
}

TEST(MultiplierSorter, AnalogAgreesOnAllVectors) {
    SimConfig analog;
    analog.model = Model::Analog;
    for (bool ct : {false, true})
        EXPECT_EQ(exhaustive_truth(multiplier_sorter(), ct, analog), exhaustive_truth(multiplier_sorter(), ct));
}

TEST(TransistorTotal, Cells) {
    EXPECT_EQ(transistor_total(gate_cell(GateKind::NAND2)).total, 3);
    EXPECT_EQ(transistor_total(gate_cell(GateKind::P_AND2_OR2)).total, 5);
    EXPECT_EQ(transistor_total(gate_cell(GateKind::INV)).total, 2);
}

TEST(TransistorTotal, MultiplierSorterBreakdown) {
    const Netlist ms = multiplier_sorter();
    const auto r = transistor_total(ms);
    int sum = 0;
    for (const auto& g : ms.gates) sum += transistor_count(g.kind);
    sum += 3 * static_cast<int>(ms.passgates.size());
    EXPECT_EQ(r.total, sum);
    EXPECT_LE(r.total, 110);
    int lines = 0;
    for (const auto& l : r.breakdown) {
        EXPECT_EQ(l.transistors, l.instances * l.per_element);
        lines += l.transistors;
    }
    EXPECT_EQ(lines, r.total);
    EXPECT_EQ(r.breakdown.back().element, "PG");
    EXPECT_EQ(r.gates, static_cast<int>(ms.gates.size()));
    EXPECT_EQ(r.gates, r.ct_gates + r.inverters);
}

TEST(Table2, CtpColumnFromCostModel) {
    const auto checks = table2_ctp_check();
    ASSERT_EQ(checks.size(), 10u);
    const int published[] = {3, 3, 5, 5, 5, 5, 5, 5, 5};
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_TRUE(checks[i].from_cell);
        EXPECT_EQ(checks[i].computed, published[i]) << checks[i].row;
        EXPECT_TRUE(checks[i].matches());
    }
    EXPECT_FALSE(checks[9].from_cell);
    EXPECT_EQ(checks[9].published, 88);
    EXPECT_EQ(checks[9].computed, transistor_total(multiplier_sorter()).total);
}

TEST(Table2, Reductions) {
    const auto r = table2_report();
    EXPECT_EQ(r.find("AOI-OAI", "cmos")->reduction_pct, 83);
    EXPECT_EQ(r.find("AOI-OAI", "ambipolar")->reduction_pct, 50);
    EXPECT_EQ(r.find("Multiplier-Sorter", "cmos")->reduction_pct, 40);
    EXPECT_EQ(r.find("Multiplier-Sorter", "evolved")->reduction_pct, 36);
    EXPECT_EQ(r.find("Multiplier-Sorter", "ambipolar")->reduction_pct, 28);
    EXPECT_FALSE(r.find("Multiplier-Sorter", "evolved_supply"));
    // 1 - 3/21 is 85.71..., which rounds to 86
    EXPECT_EQ(r.find("AOI-OAI", "evolved")->reduction_pct, 86);
    for (const auto& e : r.entries) {
        EXPECT_GE(e.reduction_pct, 0);
        EXPECT_LE(e.reduction_pct, 100);
    }
}

TEST(Table2, ReductionRounding) {
    EXPECT_EQ(reduction_percent(5, 5), 0);
    EXPECT_EQ(reduction_percent(1, 8), 88);   // 87.5 rounds away from zero
    EXPECT_EQ(reduction_percent(3, 8), 63);   // 62.5
    EXPECT_EQ(reduction_percent(88, 122), 28);
    EXPECT_THROW(reduction_percent(1, 0), contract_error);
}

TEST(Table2, RowsAndBaselines) {
    const auto& rows = table2_data();
    ASSERT_EQ(rows.size(), 10u);
    EXPECT_EQ(rows[0].name, "NAND-NOR");
    EXPECT_EQ(rows[0].cmos, 14);
    EXPECT_EQ(rows[0].ambipolar, 4);
    EXPECT_EQ(rows[9].cmos, 146);
    EXPECT_EQ(rows[9].evolved[0]->count, 138);
    EXPECT_EQ(rows[9].ambipolar, 122);
    // 9 cell rows x 5 baselines + 3 for the multiplier-sorter
    EXPECT_EQ(table2_report().entries.size(), 48u);
}
