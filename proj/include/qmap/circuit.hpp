#pragma once

#include <string>
#include <vector>

namespace qmap {

/// Qubit index. Whether it names a virtual (program) or physical (device)
/// qubit depends on where the circuit sits in the pipeline: gate operands
/// are virtual before routing and physical from routing onwards.
using QubitId = int;
using GateId = int;

enum class GateOrigin {
    Input,                // came from the parsed source circuit
    MovementInserted,     // swap/move added by the router
    DecompositionProduct, // produced by rewriting a composite gate
};

struct Gate {
    std::string name; // canonical lower-case gate name
    std::vector<QubitId> operands;
    GateOrigin origin = GateOrigin::Input;

    bool operator==(const Gate& o) const {
        return name == o.name && operands == o.operands;
    }
};

/// A gate list in program order. The index of a gate in `gates` is its
/// position, used for deterministic tie-breaking throughout the pipeline.
struct Circuit {
    std::string name;
    int qubit_count = 0;
    std::vector<Gate> gates;

    bool operator==(const Circuit& o) const {
        return qubit_count == o.qubit_count && gates == o.gates;
    }
};

} // namespace qmap
