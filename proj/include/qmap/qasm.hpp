#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmap/circuit.hpp"

namespace qmap {

struct Schedule; // schedule.hpp

/// Parses circuit text:
///   qubits N
///   cnot q0, q1      # trailing comments allowed
///   x q2
/// Names are case-insensitive and alternate rotation spellings (rx180,
/// ry-90, ...) are normalized. Lines of the bundled output format
/// ("cycle 3: { x q0 | x q1 }") are accepted too, so emitted schedules
/// re-parse. Throws ParseError with a line number on malformed input.
Circuit parse_circuit(const std::string& text, const std::string& name = "");

/// One gate per line, inverse of parse_circuit.
std::string emit_unscheduled(const Circuit& circuit);

/// A scheduled circuit grouped by start cycle.
struct BundledOutput {
    std::vector<std::vector<GateId>> cycles; // start cycle -> gate ids
    std::int64_t latency = 0;
    std::vector<int> vpmap; // virtual qubit -> physical qubit
};

BundledOutput bundle(const Circuit& circuit, const Schedule& schedule,
                     const std::vector<int>& vpmap);

/// Text form: one line per cycle ("cycle 3: { x q0 | x q2 }", idle cycles
/// as "cycle 4: -") followed by "# latency <n> cycles" and one
/// "# vpmap v<i> -> p<j>" line per virtual qubit.
std::string bundled_text(const Circuit& circuit, const BundledOutput& bundled);

} // namespace qmap
