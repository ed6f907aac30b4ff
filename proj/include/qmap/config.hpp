#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qmap {

/// How a gate acts on the state, in a form the simulator can turn into a
/// matrix. Rotations are exp(-i * angle/2 * P) for Pauli axis P, so e.g.
/// axis 'x' with angle 180 is the Pauli X up to global phase.
struct UnitaryInfo {
    enum class Kind { None, Rotation, Named };
    Kind kind = Kind::None;
    char axis = 'x';    // Rotation: 'x' or 'y'
    int angle_deg = 0;  // Rotation: one of +-45, +-90, +-180
    std::string named;  // Named: matrix looked up by name ("cz")

    bool operator==(const UnitaryInfo& o) const {
        return kind == o.kind && axis == o.axis && angle_deg == o.angle_deg &&
               named == o.named;
    }
};

enum class GateKind { SingleQubitRotation, TwoQubit, Measurement };

/// A primitive gate the control electronics can play directly.
struct GateSpec {
    std::string name;
    int arity = 1;
    int duration = 1; // cycles
    GateKind kind = GateKind::SingleQubitRotation;
    UnitaryInfo unitary;

    bool operator==(const GateSpec& o) const {
        return name == o.name && arity == o.arity && duration == o.duration &&
               kind == o.kind && unitary == o.unitary;
    }
};

/// One product gate of a rewrite rule. `roles` index into the source gate's
/// operand list, so {"cz", {0, 1}} in the cnot rule means "cz on (control,
/// target)".
struct DecompositionStep {
    std::string gate;
    std::vector<int> roles;

    bool operator==(const DecompositionStep& o) const {
        return gate == o.gate && roles == o.roles;
    }
};

struct DecompositionRule {
    std::vector<DecompositionStep> steps;

    bool operator==(const DecompositionRule& o) const { return steps == o.steps; }
};

using Edge = std::pair<int, int>;

/// Static description of a processor: qubit/coupler layout, primitive gate
/// set, rewrite rules, and the classical-control grouping (shared waveform
/// generators per frequency group, shared measurement feedlines) plus the CZ
/// flux-conflict tables that encode which operations can never overlap.
struct HardwareConfig {
    // ---- declared fields (serialized) ----
    int qubit_count = 0;
    int cycle_time_ns = 0;
    std::vector<GateSpec> gates;
    std::vector<Edge> edges; // directed; both directions listed
    std::map<std::string, DecompositionRule> decompositions;
    std::vector<std::vector<int>> awgs;      // waveform generator -> qubits
    std::vector<std::vector<int>> feedlines; // feedline -> qubits
    std::map<Edge, std::vector<Edge>> cz_edge_conflicts; // directed edge keys
    std::map<Edge, std::vector<int>> cz_detuned_qubits;  // directed edge keys

    // ---- derived fields (filled on load, never serialized) ----
    std::map<std::string, int> gate_index;   // primitive name -> gates[] index
    std::vector<std::vector<int>> adjacency; // qubit -> sorted neighbors
    std::vector<Edge> uedges;                // canonical (min,max), sorted
    std::map<Edge, int> uedge_index;
    std::vector<int> awg_of;      // qubit -> awg id
    std::vector<int> feedline_of; // qubit -> feedline id
    std::vector<std::vector<int>> uedge_conflicts; // uedge -> sorted uedge ids
    std::vector<std::vector<int>> uedge_detuned;   // uedge -> sorted qubits
    std::map<std::string, int> alias_duration;     // rule name -> critical path

    bool operator==(const HardwareConfig& o) const {
        return qubit_count == o.qubit_count && cycle_time_ns == o.cycle_time_ns &&
               gates == o.gates && edges == o.edges &&
               decompositions == o.decompositions && awgs == o.awgs &&
               feedlines == o.feedlines &&
               cz_edge_conflicts == o.cz_edge_conflicts &&
               cz_detuned_qubits == o.cz_detuned_qubits;
    }

    const GateSpec* find_gate(const std::string& name) const;
    bool is_primitive(const std::string& name) const;
    /// Duration in cycles of a primitive or of a not-yet-decomposed alias
    /// (the critical path of its full expansion). Throws for unknown names.
    int gate_duration(const std::string& name) const;
    int uedge_of(int a, int b) const; // -1 if the qubits are not connected
    bool adjacent(int a, int b) const { return uedge_of(a, b) >= 0; }
};

/// Parses and validates a JSON document. Throws ConfigError with a named
/// violation on any inconsistency.
HardwareConfig load_config(const std::string& json_text);

/// Inverse of load_config for the declared fields; output is deterministic.
std::string serialize_config(const HardwareConfig& config);

/// The bundled 17-qubit surface-code processor description. Validated by
/// the same loader as external files; cached after the first call.
const HardwareConfig& builtin_surface17();

struct CzTables {
    std::map<Edge, std::vector<Edge>> edge_conflicts;
    std::map<Edge, std::vector<int>> detuned;
};

/// Derives the CZ conflict tables from a frequency grouping (groups listed
/// from highest to lowest frequency; every edge must connect adjacent
/// groups). A CZ detunes its higher-frequency endpoint h down toward the
/// lower group, so every neighbor of h in that group other than the partner
/// must park (the detuned-spectator set). Two CZs conflict when either one's
/// endpoints touch the other's endpoints or spectators, or when they need
/// the same spectator parked.
CzTables derive_cz_tables(int qubit_count, const std::vector<Edge>& directed_edges,
                          const std::vector<std::vector<int>>& freq_groups);

/// Rebuilds the bundled processor document from its layout description and
/// derive_cz_tables. data/surface17.json is this function's frozen output;
/// a test pins the two against each other.
std::string assemble_surface17_document();

} // namespace qmap
