#include "qmap/placement.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "qmap/error.hpp"
#include "qmap/route.hpp"

namespace qmap {

VPMap identity_vpmap(int virtual_count, int physical_count) {
    if (virtual_count > physical_count)
        throw Error("circuit needs " + std::to_string(virtual_count) +
                    " qubits, processor has " + std::to_string(physical_count));
    VPMap map;
    map.forward.resize(static_cast<size_t>(virtual_count));
    map.reverse.assign(static_cast<size_t>(physical_count), -1);
    for (int v = 0; v < virtual_count; ++v) {
        map.forward[static_cast<size_t>(v)] = v;
        map.reverse[static_cast<size_t>(v)] = v;
    }
    return map;
}

WeightMap interaction_weights(const Circuit& circuit, int k) {
    WeightMap weights;
    int seen = 0;
    for (const Gate& gate : circuit.gates) {
        if (gate.operands.size() != 2) continue;
        if (seen++ >= k) break;
        auto [a, b] = std::minmax(gate.operands[0], gate.operands[1]);
        weights[{a, b}]++;
    }
    return weights;
}

std::int64_t placement_cost(const WeightMap& weights,
                            const std::vector<int>& forward,
                            const std::vector<std::vector<int>>& dist) {
    std::int64_t total = 0;
    for (const auto& [pair, w] : weights) {
        int pa = forward[static_cast<size_t>(pair.first)];
        int pb = forward[static_cast<size_t>(pair.second)];
        total += static_cast<std::int64_t>(w) *
                 (dist[static_cast<size_t>(pa)][static_cast<size_t>(pb)] - 1);
    }
    return total;
}

VPMap place_trivial(const Circuit& circuit, const HardwareConfig& config) {
    return identity_vpmap(circuit.qubit_count, config.qubit_count);
}

namespace {

// Deterministic stand-in for wall-clock budgeting: the search is capped at a
// node count derived from the budget, so identical flags explore identical
// trees regardless of machine speed.
constexpr double kNodesPerSecond = 300000.0;

struct QapProblem {
    std::vector<int> actives; // weighted virtual qubits, ascending
    std::vector<std::vector<std::int64_t>> w; // dense weights over actives
    const std::vector<std::vector<int>>* dist;
    int physical = 0;
};

struct QapSearch {
    const QapProblem* prob;
    std::vector<int> assign; // active index -> physical, -1 unassigned
    std::vector<bool> used;  // physical taken
    std::vector<int> best_assign;
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    bool have_best = false;
    std::int64_t nodes_left = 0;
    bool aborted = false;

    std::int64_t edge_cost(int ai, int pa, int aj, int pb) const {
        std::int64_t weight = prob->w[static_cast<size_t>(ai)][static_cast<size_t>(aj)];
        if (weight == 0) return 0;
        return weight *
               ((*prob->dist)[static_cast<size_t>(pa)][static_cast<size_t>(pb)] - 1);
    }

    // Cost already incurred by placing active `ai` at `p` against the
    // assigned prefix.
    std::int64_t attach_cost(int ai, int p) const {
        std::int64_t cost = 0;
        for (size_t j = 0; j < assign.size(); ++j)
            if (assign[j] >= 0)
                cost += edge_cost(ai, p, static_cast<int>(j), assign[j]);
        return cost;
    }

    // Admissible bound: assigned-pair cost is exact; every unassigned active
    // adds at least its cheapest attachment to the assigned prefix.
    std::int64_t lower_bound(std::int64_t incurred) const {
        std::int64_t bound = incurred;
        for (size_t j = 0; j < assign.size(); ++j) {
            if (assign[j] >= 0) continue;
            std::int64_t cheapest = std::numeric_limits<std::int64_t>::max();
            for (int p = 0; p < prob->physical; ++p) {
                if (used[static_cast<size_t>(p)]) continue;
                cheapest = std::min(cheapest, attach_cost(static_cast<int>(j), p));
                if (cheapest == 0) break;
            }
            if (cheapest == std::numeric_limits<std::int64_t>::max()) return cheapest;
            bound += cheapest;
        }
        return bound;
    }

    void dfs(size_t depth, std::int64_t incurred) {
        if (aborted) return;
        if (depth == assign.size()) {
            if (incurred < best_cost) {
                best_cost = incurred;
                best_assign = assign;
                have_best = true;
            }
            return;
        }
        for (int p = 0; p < prob->physical; ++p) {
            if (used[static_cast<size_t>(p)]) continue;
            if (--nodes_left < 0) {
                aborted = true;
                return;
            }
            std::int64_t next = incurred + attach_cost(static_cast<int>(depth), p);
            assign[depth] = p;
            used[static_cast<size_t>(p)] = true;
            if (lower_bound(next) <= best_cost || !have_best)
                dfs(depth + 1, next);
            assign[depth] = -1;
            used[static_cast<size_t>(p)] = false;
            if (aborted) return;
        }
    }
};

VPMap fill_remaining(const std::vector<int>& actives,
                     const std::vector<int>& active_phys, int virtual_count,
                     int physical_count) {
    VPMap map;
    map.forward.assign(static_cast<size_t>(virtual_count), -1);
    map.reverse.assign(static_cast<size_t>(physical_count), -1);
    for (size_t i = 0; i < actives.size(); ++i) {
        map.forward[static_cast<size_t>(actives[i])] = active_phys[i];
        map.reverse[static_cast<size_t>(active_phys[i])] = actives[i];
    }
    int next = 0;
    for (int v = 0; v < virtual_count; ++v) {
        if (map.forward[static_cast<size_t>(v)] >= 0) continue;
        while (map.reverse[static_cast<size_t>(next)] >= 0) ++next;
        map.forward[static_cast<size_t>(v)] = next;
        map.reverse[static_cast<size_t>(next)] = v;
    }
    return map;
}

std::vector<int> greedy_assign(const QapProblem& prob) {
    size_t n = prob.actives.size();
    std::vector<int> assign(n, -1);
    std::vector<bool> used(static_cast<size_t>(prob.physical), false);
    if (n == 0) return assign;

    // Seed: heaviest pair onto the first topology edge (distance 1).
    size_t seed_i = 0, seed_j = 1;
    std::int64_t heaviest = -1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (prob.w[i][j] > heaviest) {
                heaviest = prob.w[i][j];
                seed_i = i;
                seed_j = j;
            }
    auto place = [&](size_t ai, int p) {
        assign[ai] = p;
        used[static_cast<size_t>(p)] = true;
    };
    if (n == 1) {
        place(0, 0);
        return assign;
    }
    int pa = -1, pb = -1;
    for (int a = 0; a < prob.physical && pa < 0; ++a)
        for (int b = 0; b < prob.physical; ++b)
            if (b != a && (*prob.dist)[static_cast<size_t>(a)][static_cast<size_t>(b)] == 1) {
                pa = a;
                pb = b;
                break;
            }
    place(seed_i, pa);
    place(seed_j, pb);

    QapSearch scorer{&prob, assign, used, {}, 0, false, 0, false};
    for (size_t placed = 2; placed < n; ++placed) {
        size_t pick = n;
        std::int64_t pick_weight = -1;
        for (size_t i = 0; i < n; ++i) {
            if (assign[i] >= 0) continue;
            std::int64_t weight = 0;
            for (size_t j = 0; j < n; ++j)
                if (assign[j] >= 0) weight += prob.w[i][j];
            if (weight > pick_weight) {
                pick_weight = weight;
                pick = i;
            }
        }
        scorer.assign = assign;
        scorer.used = used;
        int best_p = -1;
        std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
        for (int p = 0; p < prob.physical; ++p) {
            if (used[static_cast<size_t>(p)]) continue;
            std::int64_t cost = scorer.attach_cost(static_cast<int>(pick), p);
            if (cost < best_cost) {
                best_cost = cost;
                best_p = p;
            }
        }
        place(pick, best_p);
    }
    return assign;
}

} // namespace

VPMap place_qap(const WeightMap& weights, int virtual_count,
                const HardwareConfig& config, double time_budget_s) {
    if (virtual_count > config.qubit_count)
        throw Error("circuit needs " + std::to_string(virtual_count) +
                    " qubits, processor has " + std::to_string(config.qubit_count));
    auto dist = all_pairs_distances(config);

    QapProblem prob;
    prob.dist = &dist;
    prob.physical = config.qubit_count;
    for (const auto& [pair, w] : weights) {
        (void)w;
        prob.actives.push_back(pair.first);
        prob.actives.push_back(pair.second);
    }
    std::sort(prob.actives.begin(), prob.actives.end());
    prob.actives.erase(std::unique(prob.actives.begin(), prob.actives.end()),
                       prob.actives.end());
    size_t n = prob.actives.size();
    prob.w.assign(n, std::vector<std::int64_t>(n, 0));
    auto active_index = [&](int v) {
        return static_cast<size_t>(
            std::lower_bound(prob.actives.begin(), prob.actives.end(), v) -
            prob.actives.begin());
    };
    for (const auto& [pair, w] : weights) {
        size_t i = active_index(pair.first);
        size_t j = active_index(pair.second);
        prob.w[i][j] += w;
        prob.w[j][i] += w;
    }

    std::vector<int> chosen;
    bool exact_done = false;
    if (n <= 10) {
        QapSearch search;
        search.prob = &prob;
        search.assign.assign(n, -1);
        search.used.assign(static_cast<size_t>(prob.physical), false);
        search.nodes_left =
            std::max<std::int64_t>(1, static_cast<std::int64_t>(time_budget_s * kNodesPerSecond));
        search.dfs(0, 0);
        if (!search.aborted && search.have_best) {
            chosen = search.best_assign;
            exact_done = true;
        } else if (search.have_best) {
            chosen = search.best_assign;
        }
    }
    if (!exact_done) {
        std::vector<int> greedy = greedy_assign(prob);
        if (chosen.empty()) {
            chosen = greedy;
        } else {
            auto as_forward = [&](const std::vector<int>& a) {
                return fill_remaining(prob.actives, a, virtual_count,
                                      config.qubit_count)
                    .forward;
            };
            if (placement_cost(weights, as_forward(greedy), dist) <
                placement_cost(weights, as_forward(chosen), dist))
                chosen = greedy;
        }
    }

    VPMap map = fill_remaining(prob.actives, chosen, virtual_count,
                               config.qubit_count);
    if (!exact_done) {
        VPMap identity = identity_vpmap(virtual_count, config.qubit_count);
        if (placement_cost(weights, identity.forward, dist) <
            placement_cost(weights, map.forward, dist))
            return identity;
    }
    return map;
}

} // namespace qmap
