#include "qmap/route.hpp"

#include <algorithm>
#include <limits>

#include "qmap/decompose.hpp"
#include "qmap/error.hpp"
#include "qmap/qodg.hpp"
#include "qmap/rng.hpp"
#include "qmap/schedule.hpp"

namespace qmap {

Strategy strategy_from_name(const std::string& name) {
    if (name == "trivial") return Strategy::Trivial;
    if (name == "minpath") return Strategy::MinPath;
    if (name == "qmap") return Strategy::Qmap;
    throw Error("unknown strategy '" + name + "' (trivial, minpath, qmap)");
}

const char* strategy_name(Strategy strategy) {
    switch (strategy) {
    case Strategy::Trivial: return "trivial";
    case Strategy::MinPath: return "minpath";
    case Strategy::Qmap: return "qmap";
    }
    return "?";
}

std::vector<std::vector<int>> all_pairs_distances(const HardwareConfig& config) {
    int n = config.qubit_count;
    const int inf = std::numeric_limits<int>::max() / 2;
    std::vector<std::vector<int>> dist(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), inf));
    for (int q = 0; q < n; ++q) dist[static_cast<size_t>(q)][static_cast<size_t>(q)] = 0;
    for (const Edge& e : config.uedges) {
        dist[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = 1;
        dist[static_cast<size_t>(e.second)][static_cast<size_t>(e.first)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::min(
                    dist[static_cast<size_t>(i)][static_cast<size_t>(j)],
                    dist[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                        dist[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dist[static_cast<size_t>(i)][static_cast<size_t>(j)] >= inf)
                throw RouteError("topology is disconnected: no path from q" +
                                 std::to_string(i) + " to q" + std::to_string(j));
    return dist;
}

std::vector<std::vector<int>> shortest_paths(const HardwareConfig& config,
                                             int a, int b) {
    auto dist = all_pairs_distances(config);
    std::vector<std::vector<int>> paths;
    std::vector<int> walk{a};
    // Every extension strictly decreasing the distance to b stays on some
    // shortest path, so plain DFS enumerates exactly the shortest paths.
    auto descend = [&](auto&& self, int at) -> void {
        if (at == b) {
            paths.push_back(walk);
            return;
        }
        for (int next : config.adjacency[static_cast<size_t>(at)]) {
            if (dist[static_cast<size_t>(next)][static_cast<size_t>(b)] !=
                dist[static_cast<size_t>(at)][static_cast<size_t>(b)] - 1)
                continue;
            walk.push_back(next);
            self(self, next);
            walk.pop_back();
        }
    };
    descend(descend, a);
    return paths;
}

std::vector<MovementSet> movement_sets(const std::vector<int>& path,
                                       const VPMap& map, bool allow_moves) {
    int d = static_cast<int>(path.size()) - 1;
    std::vector<MovementSet> sets;
    for (int k = 0; k < d; ++k) {
        MovementSet set;
        VPMap scratch = map;
        auto hop = [&](int from, int to) {
            Movement m;
            m.from = from;
            m.to = to;
            m.kind = allow_moves && scratch.clean(to) ? Movement::Kind::Move
                                                      : Movement::Kind::Swap;
            apply_movements(scratch, {m});
            set.push_back(m);
        };
        for (int i = 0; i < k; ++i)
            hop(path[static_cast<size_t>(i)], path[static_cast<size_t>(i + 1)]);
        for (int i = d; i > k + 1; --i)
            hop(path[static_cast<size_t>(i)], path[static_cast<size_t>(i - 1)]);
        sets.push_back(std::move(set));
    }
    return sets;
}

void apply_movements(VPMap& map, const MovementSet& set, int* swaps, int* moves) {
    for (const Movement& m : set) {
        int va = map.reverse[static_cast<size_t>(m.from)];
        int vb = map.reverse[static_cast<size_t>(m.to)];
        if (m.kind == Movement::Kind::Move) {
            if (vb >= 0)
                throw RouteError("MOVE into occupied qubit q" + std::to_string(m.to));
            if (moves != nullptr) ++*moves;
        } else if (swaps != nullptr) {
            ++*swaps;
        }
        map.reverse[static_cast<size_t>(m.from)] = vb;
        map.reverse[static_cast<size_t>(m.to)] = va;
        if (va >= 0) map.forward[static_cast<size_t>(va)] = m.to;
        if (vb >= 0) map.forward[static_cast<size_t>(vb)] = m.from;
    }
}

namespace {

struct Candidate {
    MovementSet set;
};

// All (shortest path) x (meeting edge) candidates for bringing the gate's
// operands together.
std::vector<Candidate> candidates_for(const HardwareConfig& config,
                                      const VPMap& map, int pa, int pb,
                                      bool allow_moves) {
    std::vector<Candidate> out;
    for (const auto& path : shortest_paths(config, pa, pb))
        for (auto& set : movement_sets(path, map, allow_moves))
            out.push_back({std::move(set)});
    return out;
}

Gate movement_gate(const Movement& m) {
    Gate g;
    g.name = m.kind == Movement::Kind::Move ? "move" : "swap";
    g.operands = {m.from, m.to};
    g.origin = GateOrigin::MovementInserted;
    return g;
}

class Router {
public:
    Router(const Circuit& circuit, const HardwareConfig& config,
           const VPMap& initial, const RouteOptions& options)
        : in_(circuit), config_(config), opt_(options), rng_(options.seed) {
        result_.circuit.name = circuit.name;
        result_.circuit.qubit_count = config.qubit_count;
        result_.final_map = initial;
    }

    RouteResult run() {
        if (opt_.strategy == Strategy::Trivial)
            run_trivial();
        else
            run_dependency_driven();
        return std::move(result_);
    }

private:
    const Circuit& in_;
    const HardwareConfig& config_;
    RouteOptions opt_;
    Rng rng_;
    RouteResult result_;
    std::vector<Gate> prefix_; // primitive expansion of the mapped output

    Gate physical(const Gate& gate) const {
        Gate g = gate;
        for (QubitId& q : g.operands)
            q = result_.final_map.forward[static_cast<size_t>(q)];
        return g;
    }

    bool nearest_neighbour(const Gate& gate) const {
        if (gate.operands.size() < 2) return true;
        return config_.adjacent(
            result_.final_map.forward[static_cast<size_t>(gate.operands[0])],
            result_.final_map.forward[static_cast<size_t>(gate.operands[1])]);
    }

    void emit(const Gate& physical_gate) {
        append_decomposed(physical_gate, config_, prefix_);
        result_.circuit.gates.push_back(physical_gate);
    }

    void insert_movements(const MovementSet& set) {
        for (const Movement& m : set) emit(movement_gate(m));
        apply_movements(result_.final_map, set, &result_.swaps, &result_.moves);
    }

    // Latency of the lookback window scheduled together with `extra`
    // primitives appended.
    std::int64_t window_latency(const std::vector<Gate>& extra) {
        Circuit tmp;
        tmp.qubit_count = config_.qubit_count;
        size_t from = 0;
        if (opt_.lookback >= 0 && prefix_.size() > static_cast<size_t>(opt_.lookback))
            from = prefix_.size() - static_cast<size_t>(opt_.lookback);
        tmp.gates.assign(prefix_.begin() + static_cast<std::ptrdiff_t>(from),
                         prefix_.end());
        tmp.gates.insert(tmp.gates.end(), extra.begin(), extra.end());
        return asap_latency(tmp, build_qodg(tmp, config_), config_);
    }

    MovementSet select_movements(const Gate& gate) {
        int pa = result_.final_map.forward[static_cast<size_t>(gate.operands[0])];
        int pb = result_.final_map.forward[static_cast<size_t>(gate.operands[1])];
        auto candidates =
            candidates_for(config_, result_.final_map, pa, pb, opt_.allow_moves);
        if (opt_.strategy == Strategy::MinPath)
            return candidates[rng_.below(candidates.size())].set;

        std::int64_t base = window_latency({});
        std::vector<std::int64_t> extension(candidates.size(), 0);
        for (size_t c = 0; c < candidates.size(); ++c) {
            std::vector<Gate> extra;
            VPMap scratch = result_.final_map;
            for (const Movement& m : candidates[c].set) {
                append_decomposed(movement_gate(m), config_, extra);
                apply_movements(scratch, {m});
            }
            Gate g = gate;
            for (QubitId& q : g.operands)
                q = scratch.forward[static_cast<size_t>(q)];
            append_decomposed(g, config_, extra);
            extension[c] = window_latency(extra) - base;
        }
        std::int64_t best = *std::min_element(extension.begin(), extension.end());
        std::vector<size_t> minima;
        for (size_t c = 0; c < candidates.size(); ++c)
            if (extension[c] == best) minima.push_back(c);
        return candidates[minima[rng_.below(minima.size())]].set;
    }

    void run_dependency_driven() {
        Qodg g = build_qodg(in_, config_);
        int n = g.gate_count;
        std::vector<int> waiting(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int p : g.pred[static_cast<size_t>(v)])
                if (p < n) waiting[static_cast<size_t>(v)]++;

        using Key = std::pair<std::int64_t, int>;
        std::vector<std::pair<Key, int>> avail;
        auto push_avail = [&](int v) {
            Key key{-g.criticality[static_cast<size_t>(v)],
                    g.position[static_cast<size_t>(v)]};
            avail.insert(std::lower_bound(avail.begin(), avail.end(),
                                          std::make_pair(key, v)),
                         {key, v});
        };
        for (int v = 0; v < n; ++v)
            if (waiting[static_cast<size_t>(v)] == 0) push_avail(v);

        while (!avail.empty()) {
            size_t pick = avail.size();
            for (size_t i = 0; i < avail.size(); ++i) {
                if (nearest_neighbour(in_.gates[static_cast<size_t>(avail[i].second)])) {
                    pick = i;
                    break;
                }
            }
            if (pick == avail.size()) {
                // Everything available is a blocked two-qubit gate; move the
                // most critical one's operands together. It is mapped on a
                // later pass once adjacent.
                insert_movements(
                    select_movements(in_.gates[static_cast<size_t>(avail[0].second)]));
                continue;
            }
            int v = avail[pick].second;
            emit(physical(in_.gates[static_cast<size_t>(v)]));
            avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
            for (int s : g.succ[static_cast<size_t>(v)])
                if (s < n && --waiting[static_cast<size_t>(s)] == 0) push_avail(s);
        }
    }

    void run_trivial() {
        for (const Gate& gate : in_.gates) {
            if (!nearest_neighbour(gate)) {
                int pa = result_.final_map.forward[static_cast<size_t>(gate.operands[0])];
                int pb = result_.final_map.forward[static_cast<size_t>(gate.operands[1])];
                auto paths = shortest_paths(config_, pa, pb);
                auto sets = movement_sets(paths[0], result_.final_map, false);
                // The first operand walks the whole path; SWAPs only.
                insert_movements(sets.back());
            }
            emit(physical(gate));
        }
    }
};

} // namespace

RouteResult route(const Circuit& circuit, const HardwareConfig& config,
                  const VPMap& initial, const RouteOptions& options) {
    if (initial.virtual_count() < circuit.qubit_count)
        throw RouteError("placement covers " +
                         std::to_string(initial.virtual_count()) +
                         " qubits, circuit uses " +
                         std::to_string(circuit.qubit_count));
    Router router(circuit, config, initial, options);
    return router.run();
}

} // namespace qmap
