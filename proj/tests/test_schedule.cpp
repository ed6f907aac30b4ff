#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "qmap/config.hpp"
#include "qmap/error.hpp"
#include "qmap/qodg.hpp"
#include "qmap/rng.hpp"
#include "qmap/schedule.hpp"
#include "test_util.hpp"

using namespace qmap;
using namespace testutil;

namespace {

Circuit phys(std::vector<Gate> gates) {
    Circuit c;
    c.qubit_count = 17;
    c.gates = std::move(gates);
    return c;
}

Schedule asap_of(const Circuit& c, const HardwareConfig& config) {
    return schedule_asap(c, build_qodg(c, config), config);
}

} // namespace

TEST_SUITE("scheduler") {

TEST_CASE("single gate starts at cycle zero") {
    HardwareConfig config = builtin_surface17();
    Circuit c = phys({Gate{"x", {0}}});
    Schedule s = asap_of(c, config);
    CHECK(s.start == std::vector<std::int64_t>{0});
    CHECK(s.latency == 1);
}

TEST_CASE("same rotation shares the waveform generator") {
    HardwareConfig config = builtin_surface17();
    // q7 and q8 sit in the same frequency group.
    Schedule s = asap_of(phys({Gate{"x", {7}}, Gate{"x", {8}}}), config);
    CHECK(s.start[0] == 0);
    CHECK(s.start[1] == 0);
    CHECK(s.latency == 1);
}

TEST_CASE("different rotations on one generator serialize") {
    HardwareConfig config = builtin_surface17();
    Schedule s = asap_of(phys({Gate{"x", {7}}, Gate{"y", {8}}}), config);
    CHECK(s.start[0] == 0);
    CHECK(s.start[1] == 1);
    CHECK(s.latency == 2);
}

TEST_CASE("generator sharing needs both same gate and same start") {
    HardwareConfig config = builtin_surface17();
    // All in group {7,8,9}: the same rotation may pile onto one cycle,
    // anything else waits for the generator.
    for (const char* a : {"x", "y", "rx45"})
        for (const char* b : {"x", "y", "rx45"}) {
            Schedule s = asap_of(
                phys({Gate{a, {7}}, Gate{b, {8}}, Gate{a, {9}}}), config);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(s.start[0] == 0);
            CHECK(s.start[2] == 0); // same rotation as gate 0, shares
            if (std::string(a) == b) {
                CHECK(s.start[1] == 0);
                CHECK(s.latency == 1);
            } else {
                CHECK(s.start[1] == 1);
                CHECK(s.latency == 2);
            }
        }
}

TEST_CASE("rotations on different generators run together") {
    HardwareConfig config = builtin_surface17();
    // q7 (group 2) and q5 (group 1) do not share hardware.
    Schedule s = asap_of(phys({Gate{"x", {7}}, Gate{"y", {5}}}), config);
    CHECK(s.start[0] == 0);
    CHECK(s.start[1] == 0);
}

TEST_CASE("measurements on one feedline share a start or wait") {
    HardwareConfig config = builtin_surface17();
    SUBCASE("simultaneous") {
        Schedule s =
            asap_of(phys({Gate{"measure", {13}}, Gate{"measure", {16}}}), config);
        CHECK(s.start[0] == 0);
        CHECK(s.start[1] == 0);
        CHECK(s.latency == 15);
    }
    SUBCASE("staggered start is forbidden") {
        // x q16 delays the second measurement past the shared start, so it
        // must wait out the whole first measurement.
        Circuit c = phys(
            {Gate{"x", {16}}, Gate{"measure", {13}}, Gate{"measure", {16}}});
        Schedule s = asap_of(c, config);
        CHECK(s.start[1] == 0);
        CHECK(s.start[2] >= 15);
        CHECK(s.latency == s.start[2] + 15);
    }
    SUBCASE("different feedlines overlap freely") {
        Circuit c = phys(
            {Gate{"x", {16}}, Gate{"measure", {4}}, Gate{"measure", {16}}});
        Schedule s = asap_of(c, config);
        CHECK(s.start[1] == 0);
        CHECK(s.start[2] == 1);
    }
}

TEST_CASE("a two-qubit gate parks its detuned spectator") {
    HardwareConfig config = builtin_surface17();
    // cz q3 q0 detunes q6; the x must wait out the cz.
    Schedule s = asap_of(phys({Gate{"cz", {3, 0}}, Gate{"x", {6}}}), config);
    CHECK(s.start[0] == 0);
    CHECK(s.start[1] == 2);
    CHECK(s.latency == 3);
    // A rotation on an uninvolved qubit is not delayed.
    Schedule t = asap_of(phys({Gate{"cz", {3, 0}}, Gate{"x", {13}}}), config);
    CHECK(t.start[1] == 0);
}

TEST_CASE("conflicting cz pairs serialize, distant ones overlap") {
    HardwareConfig config = builtin_surface17();
    Schedule near = asap_of(phys({Gate{"cz", {3, 0}}, Gate{"cz", {2, 5}}}), config);
    CHECK(near.start[0] == 0);
    CHECK(near.start[1] == 2);
    Schedule far = asap_of(phys({Gate{"cz", {3, 0}}, Gate{"cz", {13, 16}}}), config);
    CHECK(far.start[0] == 0);
    CHECK(far.start[1] == 0);
}

TEST_CASE("composite gates are rejected") {
    HardwareConfig config = builtin_surface17();
    Circuit c = phys({Gate{"cnot", {0, 2}}});
    CHECK_THROWS_AS(asap_of(c, config), Error);
    // Non-adjacent two-qubit primitives are impossible to reserve.
    Circuit d = phys({Gate{"cz", {0, 16}}});
    CHECK_THROWS_AS(asap_of(d, config), RouteError);
}

TEST_CASE("backward schedule pushes slack to the end") {
    HardwareConfig config = builtin_surface17();
    // Chain x q5 -> cz q5 q7 sets latency 3; the loose x q13 lands last.
    Circuit c = phys({Gate{"x", {5}}, Gate{"cz", {5, 7}}, Gate{"x", {13}}});
    Qodg g = build_qodg(c, config);
    Schedule asap = schedule_asap(c, g, config);
    Schedule alap = schedule_alap(c, g, config);
    CHECK(asap.start[2] == 0);
    CHECK(alap.start[0] == 0);
    CHECK(alap.start[1] == 1);
    CHECK(alap.start[2] == 2);
    CHECK(alap.latency == asap.latency);
    CHECK(validate_schedule(c, g, alap, config).ok);
}

TEST_CASE("asap is greedy: every delayed gate was resource-blocked") {
    HardwareConfig config = builtin_surface17();
    Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        Circuit c = random_nn_circuit(rng, config, 20, true);
        Qodg g = build_qodg(c, config);
        Schedule s = schedule_asap(c, g, config);
        for (size_t i = 0; i < c.gates.size(); ++i) {
            std::int64_t ready = 0;
            for (int p : g.pred[(int)i])
                if (p < g.gate_count)
                    ready = std::max(ready, s.start[(size_t)p] + g.duration[p]);
            for (std::int64_t t = ready; t < s.start[i]; ++t) {
                // Replay only reservations that were on the books at t.
                MachineState state(config);
                for (size_t j = 0; j < c.gates.size(); ++j)
                    if (j != i && s.start[j] <= t)
                        reserve_gate(state, c.gates[j], config, s.start[j]);
                CAPTURE(i);
                CAPTURE(t);
                CHECK_FALSE(is_resource_free(state, c.gates[i], config, t));
            }
        }
    }
}

TEST_CASE("property: random circuits validate under both policies") {
    HardwareConfig config = builtin_surface17();
    Rng rng(91);
    for (int trial = 0; trial < 15; ++trial) {
        Circuit c = random_nn_circuit(rng, config, 5 + (int)rng.below(60), true);
        Qodg g = build_qodg(c, config);
        Schedule asap = schedule_asap(c, g, config);
        Schedule alap = schedule_alap(c, g, config);
        ValidationReport ra = validate_schedule(c, g, asap, config);
        ValidationReport rl = validate_schedule(c, g, alap, config);
        CAPTURE(ra.message);
        CAPTURE(rl.message);
        CHECK(ra.ok);
        CHECK(rl.ok);
        // Either policy may win on makespan, but the dependency critical
        // path bounds both from below.
        CHECK(asap.latency >= g.criticality[g.source_node]);
        CHECK(alap.latency >= g.criticality[g.source_node]);
        for (std::int64_t st : alap.start) CHECK(st >= 0);
    }
}

TEST_CASE("scheduling is deterministic") {
    HardwareConfig config = builtin_surface17();
    Rng rng(5);
    Circuit c = random_nn_circuit(rng, config, 40, true);
    Qodg g = build_qodg(c, config);
    Schedule a = schedule_asap(c, g, config);
    Schedule b = schedule_asap(c, g, config);
    CHECK(a.start == b.start);
    CHECK(a.latency == b.latency);
}

TEST_CASE("validate_schedule flags broken schedules") {
    HardwareConfig config = builtin_surface17();
    Circuit c = phys({Gate{"x", {7}}, Gate{"y", {7}}});
    Qodg g = build_qodg(c, config);
    Schedule s = schedule_asap(c, g, config);
    REQUIRE(validate_schedule(c, g, s, config).ok);

    SUBCASE("dependency violation") {
        Schedule bad = s;
        bad.start = {0, 0};
        bad.latency = 1;
        CHECK_FALSE(validate_schedule(c, g, bad, config).ok);
    }
    SUBCASE("resource violation") {
        Circuit d = phys({Gate{"x", {7}}, Gate{"y", {8}}});
        Qodg gd = build_qodg(d, config);
        Schedule bad;
        bad.start = {0, 0};
        bad.latency = 1;
        CHECK_FALSE(validate_schedule(d, gd, bad, config).ok);
    }
    SUBCASE("negative start") {
        Schedule bad = s;
        bad.start = {-1, 0};
        CHECK_FALSE(validate_schedule(c, g, bad, config).ok);
    }
    SUBCASE("latency mismatch") {
        Schedule bad = s;
        bad.latency += 1;
        CHECK_FALSE(validate_schedule(c, g, bad, config).ok);
    }
    SUBCASE("wrong size") {
        Schedule bad = s;
        bad.start.pop_back();
        CHECK_FALSE(validate_schedule(c, g, bad, config).ok);
    }
}

} // TEST_SUITE
