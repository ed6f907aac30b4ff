#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"
#include "qmap/schedule.hpp"

namespace qmap {

struct CircuitStats {
    int qubits = 0;
    int gates = 0;
    int two_qubit_gates = 0;
    std::int64_t depth = 0;   // unit-time dependency steps
    std::int64_t latency = 0; // cycles
    int swaps = 0;
    int moves = 0;
    double time_s = 0.0;
};

// Longest dependency path counting every gate as one step.
std::int64_t circuit_depth(const Circuit& circuit, const HardwareConfig& config);

// Longest dependency path in cycles, ignoring control-electronics resources;
// aliases count with the critical path of their expansion.
std::int64_t dependency_latency(const Circuit& circuit, const HardwareConfig& config);

// Stats of a scheduled circuit; pass nullptr to fall back to the
// dependency-only latency (used for input circuits, which have no schedule).
CircuitStats stats(const Circuit& circuit, const Schedule* schedule,
                   const HardwareConfig& config, int swaps = 0, int moves = 0);

// (after - before) / before; throws Error when before is zero.
double overhead(double before, double after);

struct ReportRow {
    std::string name;
    std::string strategy;
    std::uint64_t seed = 0;
    std::int64_t latency = 0;
    int gates = 0;
    int czs = 0;
    int swaps = 0;
    int moves = 0;
    double time_s = 0.0;
    double latency_overhead = 0.0;
    double gate_overhead = 0.0;
};

// Both formats carry the same values in the same row order; numbers are
// printed with shortest round-trip formatting in each.
std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);

} // namespace qmap
