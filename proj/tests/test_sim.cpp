#include <gtest/gtest.h>

#include "ctlogic/errors.hpp"
#include "ctlogic/parser.hpp"
#include "ctlogic/sim.hpp"
#include "test_support.hpp"

using namespace ctlogic;

namespace {

Stimulus sweep(std::size_t n, std::initializer_list<bool> cts) {
    Stimulus s;
    for (bool ct : cts)
        for (const auto& c : exhaustive_stimulus(n, ct).cycles) s.cycles.push_back(c);
    return s;
}

std::string column(const Trace& t, Phase phase, const std::string& net) {
    std::string s;
    for (std::size_t c = 0; c < t.cycles.size(); ++c) s += t.value(c, phase, net) ? '1' : '0';
    return s;
}

StimulusCycle ms_cycle(const char* a, const char* b, bool ct) {
    StimulusCycle c;
    for (const char* p : {a, b})
        for (; *p; ++p) c.inputs.push_back(*p == '1');
    c.ct = ct;
    return c;
}

}  // namespace

TEST(Run, Nand2FourCycles) {
    const Trace t = run(gate_cell(GateKind::NAND2), sweep(2, {false}));
    EXPECT_EQ(column(t, Phase::Evaluate, "y"), "1110");
    EXPECT_EQ(column(t, Phase::Discharge, "y"), "1111");
    EXPECT_TRUE(t.hazards.empty());
}

TEST(Run, AndOrSwitchesWithControl) {
    const Trace t = run(gate_cell(GateKind::P_AND2_OR2), sweep(2, {false, true}));
    EXPECT_EQ(column(t, Phase::Evaluate, "y"), "00010111");
    EXPECT_EQ(column(t, Phase::Discharge, "y"), "00000000");
}

TEST(Run, MultiplierSorterSpotValues) {
    const Netlist ms = multiplier_sorter();
    Stimulus s;
    s.cycles = {ms_cycle("01", "01", false), ms_cycle("01", "01", true), ms_cycle("10", "11", false),
                ms_cycle("10", "11", true), ms_cycle("00", "00", false), ms_cycle("00", "00", true)};
    // inputs are declared a1 a0 b1 b0, so the operands above map straight through
    const Trace t = run(ms, s);
    EXPECT_EQ(t.bits(0, Phase::Evaluate, ms.outputs), "0001");
    EXPECT_EQ(t.bits(1, Phase::Evaluate, ms.outputs), "1100");
    EXPECT_EQ(t.bits(2, Phase::Evaluate, ms.outputs), "0110");
    EXPECT_EQ(t.bits(3, Phase::Evaluate, ms.outputs), "1110");
    EXPECT_EQ(t.bits(4, Phase::Evaluate, ms.outputs), "0000");
    EXPECT_EQ(t.bits(5, Phase::Evaluate, ms.outputs), "0000");
    EXPECT_TRUE(t.hazards.empty());
}

TEST(Run, DischargeIdleRuleForEveryNetClass) {
    const Netlist n = parse(
        "circuit t\ninput a b\noutput y z\ncontrol ct\n"
        "gate g1 NAND2 a b -> n\ngate g2 P_AND2_OR2 a b -> p\npg q n -> nq\ninv i p -> pi\ninv j n -> nj\n"
        "gate g3 AOI21 nq nj b -> y\ngate g4 P_OR3_AO21 nq a p -> z\n");
    const Trace t = run(n, sweep(2, {false, true}));
    for (std::size_t c = 0; c < t.cycles.size(); ++c) {
        for (const char* zero : {"a", "b", "ct", "p", "nq", "nj", "z"})
            EXPECT_FALSE(t.value(c, Phase::Discharge, zero)) << zero << " cycle " << c;
        for (const char* one : {"n", "y", "pi"}) EXPECT_TRUE(t.value(c, Phase::Discharge, one)) << one;
    }
    EXPECT_TRUE(t.hazards.empty());
}

TEST(Run, EvaluateUsesCycleValues) {
    const Trace t = run(parse("circuit t\ninput a\noutput y\ncontrol ct\ngate g P_AND2_OR2 a ct -> y\n"),
                        sweep(1, {false, true}));
    // control used as an ordinary data input
    EXPECT_EQ(column(t, Phase::Evaluate, "ct"), "0011");
    EXPECT_EQ(column(t, Phase::Evaluate, "y"), "0011");
}

TEST(Run, EmptyStimulus) {
    const Trace t = run(gate_cell(GateKind::NAND2), Stimulus{});
    EXPECT_TRUE(t.cycles.empty());
    EXPECT_TRUE(t.hazards.empty());
    EXPECT_EQ(t.nets, (std::vector<std::string>{"a", "b", "y"}));
}

TEST(Run, WidthMismatch) {
    Stimulus s;
    s.cycles.push_back({{true}, false});
    EXPECT_THROW(run(gate_cell(GateKind::NAND2), s), contract_error);
}

TEST(Run, RefusesLintErrors) {
    const Netlist bad = parse(fixtures::slurp("circuits/r3_violation.ctn"));
    EXPECT_THROW(run(bad, exhaustive_stimulus(3, false)), netlist_error);
    SimConfig cfg;
    cfg.enforce_lint = false;
    EXPECT_NO_THROW(run(bad, exhaustive_stimulus(3, false), cfg));
    // only monotonicity findings can be waived
    const Netlist r2 = parse("circuit t\ninput a b c\noutput y\ngate g NAND2 a b c -> y\n");
    EXPECT_THROW(run(r2, Stimulus{}, cfg), netlist_error);
}

TEST(Hazards, R3FixtureFlagsEveryCycle) {
    SimConfig cfg;
    cfg.enforce_lint = false;
    const Trace t = run(parse(fixtures::slurp("circuits/r3_violation.ctn")), exhaustive_stimulus(3, false), cfg);
    ASSERT_EQ(t.hazards.size(), 8u);
    for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(t.hazards[c], (Hazard{c, "n1", "g2"}));
    // n1 is treated as risen: y = NAND(n1, c) with n1 the evaluate value of NAND(a, b)
    EXPECT_EQ(column(t, Phase::Evaluate, "y"), "10101011");

    cfg.hazard_checking = false;
    EXPECT_TRUE(run(parse(fixtures::slurp("circuits/r3_violation.ctn")), exhaustive_stimulus(3, false), cfg)
                    .hazards.empty());
}

TEST(Hazards, PassGateFixtureIsClean) {
    const Trace t = run(parse(fixtures::slurp("circuits/r3_fixed.ctn")), exhaustive_stimulus(3, false));
    EXPECT_TRUE(t.hazards.empty());
    EXPECT_EQ(column(t, Phase::Evaluate, "y"), "10101011");
}

TEST(Analog, VoltagesRecordedOnlyInAnalogMode) {
    SimConfig cfg;
    cfg.model = Model::Analog;
    const Trace t = run(gate_cell(GateKind::NAND2), sweep(2, {false}), cfg);
    EXPECT_EQ(column(t, Phase::Evaluate, "y"), "1110");
    ASSERT_EQ(t.victims, (std::vector<std::string>{"g0"}));
    const double total = 2.0 + (1.5 / 0.35 - 2.0);
    EXPECT_DOUBLE_EQ(t.victim_voltage(0, "g0"), 0.0);
    EXPECT_NEAR(t.victim_voltage(1, "g0"), 1.0 / total, 1e-12);
    EXPECT_NEAR(t.victim_voltage(2, "g0"), 1.0 / total, 1e-12);
    EXPECT_NEAR(t.victim_voltage(3, "g0"), 2.0 / total, 1e-12);

    const Trace b = run(gate_cell(GateKind::NAND2), sweep(2, {false}));
    EXPECT_THROW((void)b.victim_voltage(0, "g0"), contract_error);
}

TEST(Analog, InfeasibleParametersRefused) {
    SimConfig cfg;
    cfg.model = Model::Analog;
    cfg.analog.threshold_ratio = 0.6;
    cfg.analog.parasitic_ff = 0.1;
    EXPECT_THROW(run(gate_cell(GateKind::NOR2), sweep(2, {false}), cfg), parameter_error);
    // the same parameters are irrelevant to the behavioral model
    cfg.model = Model::Behavioral;
    EXPECT_NO_THROW(run(gate_cell(GateKind::NOR2), sweep(2, {false}), cfg));
}

TEST(Analog, AgreesWithBehavioralOnEveryCell) {
    SimConfig analog;
    analog.model = Model::Analog;
    for (GateKind k : all_gate_kinds) {
        const Netlist cell = gate_cell(k);
        const auto s = sweep(cell.inputs.size(), {false, true});
        const Trace a = run(cell, s, analog);
        const Trace b = run(cell, s);
        for (std::size_t c = 0; c < s.cycles.size(); ++c) {
            EXPECT_EQ(a.cycles[c].evaluate, b.cycles[c].evaluate) << to_string(k);
            EXPECT_EQ(a.cycles[c].discharge, b.cycles[c].discharge) << to_string(k);
        }
    }
}

TEST(Run, Deterministic) {
    const auto s = sweep(4, {false, true});
    const Trace a = run(multiplier_sorter(), s);
    const Trace b = run(multiplier_sorter(), s);
    for (std::size_t c = 0; c < s.cycles.size(); ++c) EXPECT_EQ(a.cycles[c].evaluate, b.cycles[c].evaluate);
}

TEST(Stimulus, ParseAndSerialize) {
    const Stimulus s = parse_stimulus("# comment\n1011 0\n\n0101 1  # trailing\r\n");
    ASSERT_EQ(s.cycles.size(), 2u);
    EXPECT_EQ(s.cycles[0].inputs, (std::vector<bool>{true, false, true, true}));
    EXPECT_FALSE(s.cycles[0].ct);
    EXPECT_TRUE(s.cycles[1].ct);
    EXPECT_EQ(serialize_stimulus(s), "1011 0\n0101 1\n");
    EXPECT_EQ(parse_stimulus(serialize_stimulus(s)), s);
}

TEST(Stimulus, ZeroInputLines) {
    const Stimulus s = parse_stimulus("1\n0\n");
    ASSERT_EQ(s.cycles.size(), 2u);
    EXPECT_TRUE(s.cycles[0].inputs.empty());
    EXPECT_TRUE(s.cycles[0].ct);
    EXPECT_EQ(serialize_stimulus(s), "1\n0\n");
}

TEST(Stimulus, Rejections) {
    EXPECT_THROW(parse_stimulus("10x1 0\n"), parse_error);
    EXPECT_THROW(parse_stimulus("1011 01\n"), parse_error);
    EXPECT_THROW(parse_stimulus("1011 0 1\n"), parse_error);
    try {
        parse_stimulus("00 0\n10x1 0\n");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(Stimulus, RowBitsMostSignificantFirst) {
    EXPECT_EQ(row_bits(0b1011, 4), (std::vector<bool>{true, false, true, true}));
    EXPECT_EQ(exhaustive_stimulus(2, true).cycles.size(), 4u);
    EXPECT_EQ(exhaustive_stimulus(2, true).cycles[1].inputs, (std::vector<bool>{false, true}));
}
