#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qmap/config.hpp"
#include "qmap/oracle.hpp"
#include "qmap/qodg.hpp"
#include "qmap/rng.hpp"
#include "test_util.hpp"

using namespace qmap;
using namespace testutil;

namespace {

bool has_edge(const Qodg& g, int u, int v) {
    return std::find(g.succ[u].begin(), g.succ[u].end(), v) != g.succ[u].end();
}

// Reachability over successor edges, for path-existence properties.
bool reaches(const Qodg& g, int from, int to) {
    std::vector<int> stack{from};
    std::vector<char> seen(g.node_count(), 0);
    seen[from] = 1;
    while (!stack.empty()) {
        int at = stack.back();
        stack.pop_back();
        if (at == to) return true;
        for (int nxt : g.succ[at])
            if (!seen[nxt]) {
                seen[nxt] = 1;
                stack.push_back(nxt);
            }
    }
    return false;
}

Circuit nn_circuit(std::vector<Gate> gates, int qubits = 17) {
    Circuit c;
    c.qubit_count = qubits;
    c.gates = std::move(gates);
    return c;
}

} // namespace

TEST_SUITE("qodg") {

TEST_CASE("sequential gates on one qubit form a chain") {
    HardwareConfig config = builtin_surface17();
    Qodg g = build_qodg(nn_circuit({Gate{"x", {0}}, Gate{"y", {0}}}), config);
    CHECK(g.gate_count == 2);
    CHECK(has_edge(g, 0, 1));
    CHECK_FALSE(has_edge(g, 1, 0));
    CHECK(has_edge(g, g.source_node, 0));
    CHECK(has_edge(g, 1, g.sink_node));
    CHECK(g.criticality[g.source_node] == 2);
    CHECK(g.criticality[0] == 2);
    CHECK(g.criticality[1] == 1);
}

TEST_CASE("disjoint gates share no edge") {
    HardwareConfig config = builtin_surface17();
    Qodg g = build_qodg(nn_circuit({Gate{"x", {0}}, Gate{"y", {1}}}), config);
    CHECK_FALSE(has_edge(g, 0, 1));
    CHECK_FALSE(has_edge(g, 1, 0));
    CHECK(has_edge(g, g.source_node, 0));
    CHECK(has_edge(g, g.source_node, 1));
}

TEST_CASE("commutation exemptions skip the dependency") {
    HardwareConfig config = builtin_surface17();
    auto independent = [&](Gate a, Gate b) {
        Qodg g = build_qodg(nn_circuit({a, b}), config);
        return !has_edge(g, 0, 1) && !has_edge(g, 1, 0);
    };
    // cz-cz through any shared operand.
    CHECK(independent(Gate{"cz", {0, 2}}, Gate{"cz", {2, 5}}));
    // cnot-cnot sharing only the controls.
    CHECK(independent(Gate{"cnot", {2, 0}}, Gate{"cnot", {2, 5}}));
    // cnot-cnot sharing only the targets.
    CHECK(independent(Gate{"cnot", {0, 2}}, Gate{"cnot", {5, 2}}));
    // cz against a cnot control.
    CHECK(independent(Gate{"cz", {0, 2}}, Gate{"cnot", {2, 5}}));
    // z-axis rotation against cz and against a cnot control.
    CHECK(independent(Gate{"z", {0}}, Gate{"cz", {0, 2}}));
    CHECK(independent(Gate{"t", {2}}, Gate{"cnot", {2, 5}}));
    CHECK(independent(Gate{"sdag", {0}}, Gate{"cz", {0, 3}}));
}

TEST_CASE("everything else on a shared qubit is ordered") {
    HardwareConfig config = builtin_surface17();
    auto ordered = [&](Gate a, Gate b) {
        Qodg g = build_qodg(nn_circuit({a, b}), config);
        return has_edge(g, 0, 1) && !has_edge(g, 1, 0);
    };
    // cnot control against its own target side.
    CHECK(ordered(Gate{"cnot", {0, 2}}, Gate{"cnot", {2, 5}}));
    // x touches a cz operand.
    CHECK(ordered(Gate{"x", {0}}, Gate{"cz", {0, 2}}));
    // cnot target against cz.
    CHECK(ordered(Gate{"cnot", {0, 2}}, Gate{"cz", {2, 5}}));
    // Two diagonal rotations stay in program order even though they
    // commute algebraically.
    CHECK(ordered(Gate{"z", {0}}, Gate{"t", {0}}));
    CHECK(ordered(Gate{"z", {0}}, Gate{"z", {0}}));
    // measure blocks everything.
    CHECK(ordered(Gate{"z", {0}}, Gate{"measure", {0}}));
    CHECK(ordered(Gate{"measure", {0}}, Gate{"measure", {0}}));
}

TEST_CASE("criticality adds real durations") {
    HardwareConfig config = builtin_surface17();
    // x (1 cycle) then measure (15 cycles): path length 16.
    Qodg g = build_qodg(nn_circuit({Gate{"x", {0}}, Gate{"measure", {0}}}), config);
    CHECK(g.criticality[0] == 16);
    CHECK(g.criticality[1] == 15);
    CHECK(g.criticality[g.source_node] == 16);
    CHECK(g.criticality[g.sink_node] == 0);
    CHECK(g.duration[1] == 15);

    // Composite aliases weigh their expansion's critical path.
    Qodg h = build_qodg(nn_circuit({Gate{"cnot", {0, 2}}}), config);
    CHECK(h.duration[0] == 4);
    CHECK(h.criticality[h.source_node] == 4);

    Qodg u = build_qodg(nn_circuit({Gate{"x", {0}}, Gate{"measure", {0}}}), config,
                        true);
    CHECK(u.criticality[u.source_node] == 2);
}

TEST_CASE("positions number gates by circuit index") {
    HardwareConfig config = builtin_surface17();
    Qodg g = build_qodg(nn_circuit({Gate{"x", {0}}, Gate{"y", {1}}, Gate{"x", {2}}}),
                        config);
    CHECK(g.position[0] == 0);
    CHECK(g.position[1] == 1);
    CHECK(g.position[2] == 2);
    CHECK(g.node_count() == 5);
    CHECK(g.source_node == 3);
    CHECK(g.sink_node == 4);
}

TEST_CASE("empty circuit still connects source to sink") {
    HardwareConfig config = builtin_surface17();
    Circuit c;
    c.qubit_count = 2;
    Qodg g = build_qodg(c, config);
    CHECK(has_edge(g, g.source_node, g.sink_node));
    CHECK(g.criticality[g.source_node] == 0);
}

TEST_CASE("reverse_qodg flips edges and mirrors positions") {
    HardwareConfig config = builtin_surface17();
    Circuit c = nn_circuit({Gate{"x", {0}}, Gate{"y", {0}}, Gate{"measure", {0}}});
    Qodg g = build_qodg(c, config);
    Qodg r = reverse_qodg(g);
    CHECK(r.gate_count == g.gate_count);
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.succ[u]) {
            CHECK(has_edge(r, v == g.source_node   ? r.sink_node
                              : v == g.sink_node   ? r.source_node
                                                   : v,
                           u == g.source_node ? r.sink_node
                           : u == g.sink_node ? r.source_node
                                              : u));
        }
    CHECK(r.position[0] == 2);
    CHECK(r.position[2] == 0);
    // Reverse criticality of the first gate counts the whole chain again.
    CHECK(r.criticality[r.source_node] == g.criticality[g.source_node]);
    CHECK(r.criticality[2] == 17); // measure first in reverse order
    CHECK(r.criticality[0] == 1);
}

TEST_CASE("property: non-commuting shared-qubit pairs are path-connected") {
    HardwareConfig config = builtin_surface17();
    Rng rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        Circuit c = random_nn_circuit(rng, config, 40, true);
        Qodg g = build_qodg(c, config);
        for (size_t i = 0; i < c.gates.size(); ++i)
            for (size_t j = i + 1; j < c.gates.size(); ++j) {
                if (gates_commute(c.gates[i], c.gates[j])) continue;
                CAPTURE(i);
                CAPTURE(j);
                CHECK(reaches(g, (int)i, (int)j));
            }
    }
}

TEST_CASE("property: declared-commuting unitary pairs really commute") {
    HardwareConfig config = builtin_surface17();
    const Gate pool[] = {
        Gate{"x", {0}},      Gate{"t", {0}},      Gate{"z", {1}},
        Gate{"sdag", {2}},   Gate{"cz", {0, 1}},  Gate{"cz", {1, 2}},
        Gate{"cnot", {0, 1}}, Gate{"cnot", {1, 0}}, Gate{"cnot", {2, 1}},
        Gate{"swap", {0, 1}}, Gate{"rx45", {2}},   Gate{"ry90", {1}},
    };
    Circuit ab, ba;
    ab.qubit_count = ba.qubit_count = 3;
    for (const Gate& a : pool)
        for (const Gate& b : pool) {
            if (!gates_commute(a, b)) continue;
            ab.gates = {a, b};
            ba.gates = {b, a};
            CAPTURE(a.name);
            CAPTURE(b.name);
            CHECK(trace_fidelity_error(unitary_of(ab, config),
                                       unitary_of(ba, config)) < 1e-12);
        }
}

} // TEST_SUITE
