#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"

namespace qmap {

// Virtual-to-physical assignment. A physical qubit with no virtual state is
// clean: it holds |0> and is a legal MOVE destination. Movements keep that
// equivalence (a SWAP into a clean qubit leaves |0> behind).
struct VPMap {
    std::vector<int> forward; // virtual -> physical
    std::vector<int> reverse; // physical -> virtual, -1 when clean

    bool clean(int phys) const { return reverse[static_cast<size_t>(phys)] < 0; }
    int virtual_count() const { return static_cast<int>(forward.size()); }
    bool operator==(const VPMap&) const = default;
};

VPMap identity_vpmap(int virtual_count, int physical_count);

// Unordered virtual pair -> interaction count, first < second.
using WeightMap = std::map<std::pair<int, int>, int>;

// Counts interactions among the first `k` two-qubit gates.
WeightMap interaction_weights(const Circuit& circuit, int k = 10);

// Sum over weighted pairs of (distance between images - 1).
std::int64_t placement_cost(const WeightMap& weights,
                            const std::vector<int>& forward,
                            const std::vector<std::vector<int>>& dist);

// Virtual qubit i on physical qubit i; the rest clean.
VPMap place_trivial(const Circuit& circuit, const HardwareConfig& config);

// Minimizes placement_cost. Exact branch and bound when at most 10 virtual
// qubits carry weight and the node budget (derived from the time budget)
// allows; greedy construction otherwise, never worse than the identity
// assignment. Deterministic: ties resolve to the lexicographically smallest
// assignment in exact mode.
VPMap place_qap(const WeightMap& weights, int virtual_count,
                const HardwareConfig& config, double time_budget_s = 10.0);

} // namespace qmap
