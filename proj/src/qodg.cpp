#include "qmap/qodg.hpp"

#include <algorithm>

#include "qmap/error.hpp"

namespace qmap {

QubitRole role_on(const Gate& gate, QubitId q) {
    if (gate.name == "cz") return QubitRole::CzOperand;
    if (gate.name == "cnot")
        return gate.operands[0] == q ? QubitRole::CnotControl : QubitRole::CnotTarget;
    if (gate.name == "z" || gate.name == "s" || gate.name == "sdag" ||
        gate.name == "t" || gate.name == "tdag")
        return QubitRole::DiagonalGate;
    return QubitRole::Blocker;
}

bool roles_commute(QubitRole a, QubitRole b) {
    if (a == QubitRole::Blocker || b == QubitRole::Blocker) return false;
    if (a == QubitRole::CnotTarget || b == QubitRole::CnotTarget)
        return a == b; // targets only commute with targets
    // Remaining roles are diagonal on the shared qubit, but only pairs
    // involving a two-qubit operand are reordered; two plain rotations
    // stay in program order.
    return !(a == QubitRole::DiagonalGate && b == QubitRole::DiagonalGate);
}

bool gates_commute(const Gate& a, const Gate& b) {
    for (QubitId q : a.operands) {
        if (std::find(b.operands.begin(), b.operands.end(), q) == b.operands.end())
            continue;
        if (!roles_commute(role_on(a, q), role_on(b, q))) return false;
    }
    return true;
}

Qodg build_qodg(const Circuit& circuit, const HardwareConfig& config,
                bool unit_durations) {
    int n = static_cast<int>(circuit.gates.size());
    Qodg g;
    g.gate_count = n;
    g.source_node = n;
    g.sink_node = n + 1;
    g.succ.assign(static_cast<size_t>(n) + 2, {});
    g.pred.assign(static_cast<size_t>(n) + 2, {});
    g.duration.assign(static_cast<size_t>(n) + 2, 0);
    g.position.assign(static_cast<size_t>(n) + 2, 0);
    g.criticality.assign(static_cast<size_t>(n) + 2, 0);
    for (int i = 0; i < n; ++i) {
        g.duration[static_cast<size_t>(i)] =
            unit_durations ? 1 : config.gate_duration(circuit.gates[static_cast<size_t>(i)].name);
        g.position[static_cast<size_t>(i)] = i;
    }
    g.position[static_cast<size_t>(g.source_node)] = -1;
    g.position[static_cast<size_t>(g.sink_node)] = n;

    auto add_edge = [&](int u, int v) {
        auto& s = g.succ[static_cast<size_t>(u)];
        if (std::find(s.begin(), s.end(), v) == s.end()) {
            s.push_back(v);
            g.pred[static_cast<size_t>(v)].push_back(u);
        }
    };

    // Per-qubit commuting windows. A new gate joining the current window
    // depends on everything in the previous one; a gate that does not
    // commute with the window closes it and depends on all its members.
    std::vector<std::vector<int>> window(static_cast<size_t>(circuit.qubit_count));
    std::vector<std::vector<int>> prev_window(static_cast<size_t>(circuit.qubit_count));
    for (int i = 0; i < n; ++i) {
        const Gate& gate = circuit.gates[static_cast<size_t>(i)];
        for (QubitId q : gate.operands) {
            auto& cur = window[static_cast<size_t>(q)];
            bool joins = true;
            for (int m : cur) {
                const Gate& other = circuit.gates[static_cast<size_t>(m)];
                if (!roles_commute(role_on(gate, q), role_on(other, q))) {
                    joins = false;
                    break;
                }
            }
            if (joins) {
                for (int m : prev_window[static_cast<size_t>(q)]) add_edge(m, i);
            } else {
                for (int m : cur) add_edge(m, i);
                prev_window[static_cast<size_t>(q)] = cur;
                cur.clear();
            }
            cur.push_back(i);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (g.pred[static_cast<size_t>(i)].empty()) add_edge(g.source_node, i);
        if (g.succ[static_cast<size_t>(i)].empty()) add_edge(i, g.sink_node);
    }
    if (n == 0) add_edge(g.source_node, g.sink_node);

    // Gate order is a topological order (edges only point forward), so one
    // reverse sweep computes longest paths to the sink.
    g.criticality[static_cast<size_t>(g.sink_node)] = 0;
    for (int v = n - 1; v >= -1; --v) {
        int node = v == -1 ? g.source_node : v;
        std::int64_t best = 0;
        for (int s : g.succ[static_cast<size_t>(node)])
            best = std::max(best, g.criticality[static_cast<size_t>(s)]);
        g.criticality[static_cast<size_t>(node)] =
            best + g.duration[static_cast<size_t>(node)];
    }
    return g;
}

Qodg reverse_qodg(const Qodg& graph) {
    Qodg r = graph;
    std::swap(r.succ, r.pred);
    std::swap(r.source_node, r.sink_node);
    for (int i = 0; i < r.gate_count; ++i)
        r.position[static_cast<size_t>(i)] =
            r.gate_count - 1 - graph.position[static_cast<size_t>(i)];
    r.position[static_cast<size_t>(r.source_node)] = -1;
    r.position[static_cast<size_t>(r.sink_node)] = r.gate_count;

    // Indices no longer follow topological order, so walk by Kahn layers.
    std::vector<int> indeg(static_cast<size_t>(r.node_count()), 0);
    for (int v = 0; v < r.node_count(); ++v)
        for (int s : r.succ[static_cast<size_t>(v)]) indeg[static_cast<size_t>(s)]++;
    std::vector<int> order;
    order.reserve(static_cast<size_t>(r.node_count()));
    std::vector<int> queue{r.source_node};
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (int s : r.succ[static_cast<size_t>(v)])
            if (--indeg[static_cast<size_t>(s)] == 0) queue.push_back(s);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::int64_t best = 0;
        for (int s : r.succ[static_cast<size_t>(*it)])
            best = std::max(best, r.criticality[static_cast<size_t>(s)]);
        r.criticality[static_cast<size_t>(*it)] =
            best + r.duration[static_cast<size_t>(*it)];
    }
    return r;
}

} // namespace qmap
