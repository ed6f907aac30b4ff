#pragma once

#include <cstdint>
#include <vector>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"

namespace qmap {

/// Weighted gate dependency graph. Node i is circuit gate i; two pseudo
/// nodes SOURCE (= gate_count) and SINK (= gate_count + 1) of duration 0
/// bracket the gate nodes. An edge u -> v means v may start only after u
/// finishes, weighted by u's duration (stored per node, not per edge).
struct Qodg {
    int gate_count = 0;
    int source_node = 0;
    int sink_node = 0;
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<int>> pred;
    std::vector<int> duration;            // per node; pseudo nodes are 0
    std::vector<int> position;            // circuit index, for tie-breaking
    std::vector<std::int64_t> criticality; // longest path to sink, own duration included

    int node_count() const { return gate_count + 2; }
};

/// How a gate acts on one of its qubits, for commutation purposes.
enum class QubitRole {
    CzOperand,    // cz on either operand: diagonal
    CnotControl,  // diagonal
    CnotTarget,   // X on the target
    DiagonalGate, // z, s, sdag, t, tdag
    Blocker,      // anything else orders unconditionally
};

QubitRole role_on(const Gate& gate, QubitId q);

/// The exempted pairs: CZ-CZ, CNOT-CNOT sharing only controls or only
/// targets, CZ-CNOT through the CNOT's control, and diagonal single-qubit
/// gates against CZ or a CNOT control.
bool roles_commute(QubitRole a, QubitRole b);

/// True when the two gates may reorder freely: no shared qubit, or every
/// shared qubit passes roles_commute.
bool gates_commute(const Gate& a, const Gate& b);

/// Builds the graph with commutation-aware dependencies. Composite aliases
/// still present in the circuit carry the critical-path duration of their
/// expansion. With unit_durations every gate weighs 1 cycle (used for the
/// depth metric).
Qodg build_qodg(const Circuit& circuit, const HardwareConfig& config,
                bool unit_durations = false);

/// Same nodes with every edge flipped and positions mirrored; criticality
/// is recomputed toward the new sink. Drives backward (ALAP) scheduling.
Qodg reverse_qodg(const Qodg& graph);

} // namespace qmap
