#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"
#include "qmap/placement.hpp"

namespace qmap {

enum class Strategy { Trivial, MinPath, Qmap };

Strategy strategy_from_name(const std::string& name); // throws Error
const char* strategy_name(Strategy strategy);

// Floyd-Warshall hop counts; throws RouteError on a disconnected topology.
std::vector<std::vector<int>> all_pairs_distances(const HardwareConfig& config);

// Every simple path from a to b of minimal length, as vertex sequences.
// Deterministic order: depth-first over distance-decreasing neighbors taken
// in ascending id.
std::vector<std::vector<int>> shortest_paths(const HardwareConfig& config,
                                             int a, int b);

struct Movement {
    enum class Kind { Swap, Move };
    Kind kind;
    int from; // physical; for Move the state flows from -> to
    int to;

    bool operator==(const Movement&) const = default;
};

using MovementSet = std::vector<Movement>;

// The d meeting choices along a path of d edges: choice k advances the
// source k hops and the target d-1-k hops. Hops onto qubits that are clean
// at that point become MOVEs when allow_moves is set, SWAPs otherwise.
std::vector<MovementSet> movement_sets(const std::vector<int>& path,
                                       const VPMap& map, bool allow_moves);

// Updates the map as the movements execute; asserts MOVE destinations are
// clean. Counts hops into `swaps` and `moves` when given.
void apply_movements(VPMap& map, const MovementSet& set, int* swaps = nullptr,
                     int* moves = nullptr);

struct RouteOptions {
    Strategy strategy = Strategy::Qmap;
    std::uint64_t seed = 0;
    bool allow_moves = true;
    // Number of most recent primitive gates of the mapped prefix that the
    // latency evaluation reschedules; -1 replays the whole prefix.
    int lookback = -1;
};

struct RouteResult {
    Circuit circuit; // physical operands; movements kept composite
    VPMap final_map;
    int swaps = 0;
    int moves = 0;
};

// Dependency-driven mapping: repeatedly map the most critical available gate
// that is single-qubit or nearest-neighbour; otherwise insert movements for
// the most critical blocked two-qubit gate. Movement choice per strategy:
// qmap picks a random minimum-latency-extension candidate, minpath a random
// candidate, trivial (which processes gates in input order) the first path
// with the source walking all the way, SWAPs only.
RouteResult route(const Circuit& circuit, const HardwareConfig& config,
                  const VPMap& initial, const RouteOptions& options);

} // namespace qmap
