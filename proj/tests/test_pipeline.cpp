#include <doctest.h>

#include <vector>

#include "qmap/config.hpp"
#include "qmap/oracle.hpp"
#include "qmap/pipeline.hpp"
#include "qmap/qodg.hpp"
#include "qmap/rng.hpp"
#include "qmap/schedule.hpp"
#include "test_util.hpp"

using namespace qmap;
using namespace testutil;

namespace {

Circuit two_x() {
    Circuit c;
    c.qubit_count = 1;
    c.gates = {Gate{"x", {0}}, Gate{"x", {0}}};
    return c;
}

} // namespace

TEST_SUITE("pipeline") {

TEST_CASE("the baseline strategy maps in place and leaves gates alone") {
    HardwareConfig config = builtin_surface17();
    PipelineOptions opt;
    opt.strategy = Strategy::Trivial;
    opt.measure_time = false;
    PipelineResult res = run_pipeline(two_x(), config, opt);
    CHECK(res.initial_map == identity_vpmap(1, 17));
    CHECK(res.mapped.gates.size() == 2); // no rotation merging by default
    CHECK(res.schedule.latency == 2);
    CHECK(res.output_stats.latency == 2);
}

TEST_CASE("the optimizing strategies cancel the inverse pair") {
    HardwareConfig config = builtin_surface17();
    for (Strategy strat : {Strategy::MinPath, Strategy::Qmap}) {
        PipelineOptions opt;
        opt.strategy = strat;
        opt.measure_time = false;
        PipelineResult res = run_pipeline(two_x(), config, opt);
        CHECK(res.mapped.gates.empty());
        CHECK(res.schedule.latency == 0);
    }
    // Explicit overrides beat the strategy defaults.
    PipelineOptions opt;
    opt.strategy = Strategy::Trivial;
    opt.optimize = OptimizeMode::Both;
    opt.measure_time = false;
    CHECK(run_pipeline(two_x(), config, opt).mapped.gates.empty());
    opt.strategy = Strategy::Qmap;
    opt.optimize = OptimizeMode::None;
    CHECK(run_pipeline(two_x(), config, opt).mapped.gates.size() == 2);
}

TEST_CASE("pipeline output is primitive, legal, and validated") {
    HardwareConfig config = builtin_surface17();
    Rng rng(17);
    for (Strategy strat :
         {Strategy::Trivial, Strategy::MinPath, Strategy::Qmap}) {
        Circuit c = random_input_circuit(rng, 8, 40, true);
        PipelineOptions opt;
        opt.strategy = strat;
        opt.measure_time = false;
        PipelineResult res = run_pipeline(c, config, opt);
        for (const Gate& g : res.mapped.gates) {
            CHECK(config.is_primitive(g.name));
            if (g.operands.size() == 2)
                CHECK(config.adjacent(g.operands[0], g.operands[1]));
        }
        Qodg g = build_qodg(res.mapped, config);
        ValidationReport rep = validate_schedule(res.mapped, g, res.schedule, config);
        CAPTURE(rep.message);
        CHECK(rep.ok);
        CHECK(res.output_stats.latency == res.schedule.latency);
        CHECK(res.output_stats.swaps == res.swaps);
        CHECK(res.output_stats.moves == res.moves);
        CHECK(res.output_stats.time_s == 0.0);
    }
}

TEST_CASE("identical options and seed reproduce the result exactly") {
    HardwareConfig config = builtin_surface17();
    Rng rng(31);
    Circuit c = random_input_circuit(rng, 7, 30, false);
    for (Strategy strat :
         {Strategy::Trivial, Strategy::MinPath, Strategy::Qmap}) {
        PipelineOptions opt;
        opt.strategy = strat;
        opt.seed = 77;
        opt.restarts = 2;
        opt.measure_time = false;
        PipelineResult a = run_pipeline(c, config, opt);
        PipelineResult b = run_pipeline(c, config, opt);
        CHECK(a.mapped == b.mapped);
        CHECK(a.schedule.start == b.schedule.start);
        CHECK(a.schedule.latency == b.schedule.latency);
        CHECK(a.initial_map == b.initial_map);
        CHECK(a.final_map == b.final_map);
        CHECK(a.chosen_restart == b.chosen_restart);
        CHECK(a.output_stats.time_s == b.output_stats.time_s);
    }
}

TEST_CASE("more restarts never hurt the final latency") {
    HardwareConfig config = builtin_surface17();
    Rng rng(57);
    for (int trial = 0; trial < 3; ++trial) {
        Circuit c = random_input_circuit(rng, 9, 50, false);
        PipelineOptions opt;
        opt.strategy = Strategy::MinPath;
        opt.seed = 5;
        opt.measure_time = false;
        opt.restarts = 1;
        PipelineResult one = run_pipeline(c, config, opt);
        opt.restarts = 4;
        PipelineResult four = run_pipeline(c, config, opt);
        CHECK(four.schedule.latency <= one.schedule.latency);
        CHECK(four.chosen_restart < 4);
    }
}

TEST_CASE("mapped circuits implement the input circuit") {
    HardwareConfig config = builtin_surface17();
    Rng rng(71);
    for (int trial = 0; trial < 4; ++trial) {
        Circuit c = random_input_circuit(rng, 2 + (int)rng.below(3), 12, false);
        for (Strategy strat :
             {Strategy::Trivial, Strategy::MinPath, Strategy::Qmap}) {
            PipelineOptions opt;
            opt.strategy = strat;
            opt.seed = rng.next();
            opt.measure_time = false;
            PipelineResult res = run_pipeline(c, config, opt);
            CAPTURE(strategy_name(strat));
            CHECK(equivalent(c, res.mapped, res.initial_map.forward,
                             res.final_map.forward, config));
        }
    }
}

TEST_CASE("overheads compare input and output") {
    HardwareConfig config = builtin_surface17();
    Circuit c;
    c.qubit_count = 2;
    c.gates = {Gate{"x", {0}}, Gate{"cnot", {0, 1}}};
    PipelineOptions opt;
    opt.strategy = Strategy::Trivial;
    opt.measure_time = false;
    PipelineResult res = run_pipeline(c, config, opt);
    CHECK(res.input_stats.gates == 2);
    CHECK(res.input_stats.latency == 5); // x then a 4-cycle cnot
    CHECK(res.latency_overhead ==
          overhead((double)res.input_stats.latency,
                   (double)res.output_stats.latency));
    CHECK(res.gate_overhead == overhead((double)res.input_stats.gates,
                                        (double)res.output_stats.gates));

    Circuit empty;
    empty.qubit_count = 2;
    PipelineResult none = run_pipeline(empty, config, opt);
    CHECK(none.latency_overhead == 0.0);
    CHECK(none.gate_overhead == 0.0);
}

TEST_CASE("measured circuits run through the whole pipeline") {
    HardwareConfig config = builtin_surface17();
    Circuit c;
    c.qubit_count = 3;
    c.gates = {Gate{"h", {0}}, Gate{"cnot", {0, 1}}, Gate{"cnot", {1, 2}},
               Gate{"measure", {0}}, Gate{"measure", {1}}, Gate{"measure", {2}}};
    PipelineOptions opt;
    opt.strategy = Strategy::Qmap;
    opt.measure_time = false;
    PipelineResult res = run_pipeline(c, config, opt);
    int measures = 0;
    for (const Gate& g : res.mapped.gates) measures += g.name == "measure";
    CHECK(measures == 3);
    CHECK(res.schedule.latency >= 15);
}

TEST_CASE("name parsing for the cli surface") {
    CHECK(strategy_from_name("qmap") == Strategy::Qmap);
    CHECK(strategy_from_name("minpath") == Strategy::MinPath);
    CHECK(strategy_from_name("trivial") == Strategy::Trivial);
    CHECK_THROWS_AS(strategy_from_name("fancy"), Error);
    CHECK(optimize_from_name("none") == OptimizeMode::None);
    CHECK(optimize_from_name("pre") == OptimizeMode::Pre);
    CHECK(optimize_from_name("post") == OptimizeMode::Post);
    CHECK(optimize_from_name("both") == OptimizeMode::Both);
    CHECK_THROWS_AS(optimize_from_name("max"), Error);
    CHECK(placement_from_name("qap") == PlacementMode::Qap);
    CHECK(placement_from_name("trivial") == PlacementMode::Trivial);
    CHECK_THROWS_AS(placement_from_name("magic"), Error);
}

} // TEST_SUITE
