#pragma once

#include <cstdint>
#include <optional>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"
#include "qmap/metrics.hpp"
#include "qmap/placement.hpp"
#include "qmap/route.hpp"
#include "qmap/schedule.hpp"

namespace qmap {

enum class OptimizeMode { None, Pre, Post, Both };
enum class PlacementMode { Qap, Trivial };

OptimizeMode optimize_from_name(const std::string& name); // throws Error
PlacementMode placement_from_name(const std::string& name);

struct PipelineOptions {
    Strategy strategy = Strategy::Qmap;
    std::uint64_t seed = 0;
    int restarts = 1;
    int lookback = -1; // primitives of mapped prefix rescheduled; -1 = all
    bool allow_moves = true;
    // Unset fields follow the strategy: the trivial baseline uses the
    // identity placement and no optimization, the others QAP and both passes.
    std::optional<OptimizeMode> optimize;
    std::optional<PlacementMode> placement;
    double placement_budget_s = 10.0;
    int placement_gates = 10;
    // When false, time_s is reported as exactly 0 so repeated runs give
    // byte-identical metrics.
    bool measure_time = true;
};

struct PipelineResult {
    Circuit mapped;    // primitive gates on physical qubits
    Schedule schedule; // resource-legal ALAP schedule of `mapped`
    VPMap initial_map;
    VPMap final_map;
    int swaps = 0;
    int moves = 0;
    int chosen_restart = 0;
    CircuitStats input_stats;
    CircuitStats output_stats;
    double latency_overhead = 0.0;
    double gate_overhead = 0.0;
};

// parse -> place -> partial decompose -> pre-optimize -> route -> full
// decompose -> post-optimize -> ALAP schedule, keeping the best of
// `restarts` routing streams by final latency. The returned schedule has
// passed validate_schedule; an illegal one raises ValidationError instead.
PipelineResult run_pipeline(const Circuit& input, const HardwareConfig& config,
                            const PipelineOptions& options);

} // namespace qmap
