#include "qmap/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qmap/error.hpp"

namespace qmap {

std::vector<ResourceId> resources_for(const Gate& gate, const HardwareConfig& config) {
    const GateSpec* spec = config.find_gate(gate.name);
    if (spec == nullptr)
        throw Error("cannot schedule alias gate '" + gate.name +
                    "': decompose it into primitives first");
    using K = ResourceId::Kind;
    std::vector<ResourceId> res;
    switch (spec->kind) {
    case GateKind::SingleQubitRotation:
        res.push_back({K::Awg, config.awg_of[static_cast<size_t>(gate.operands[0])]});
        res.push_back({K::Qubit, gate.operands[0]});
        break;
    case GateKind::Measurement:
        res.push_back({K::Feedline, config.feedline_of[static_cast<size_t>(gate.operands[0])]});
        res.push_back({K::Qubit, gate.operands[0]});
        break;
    case GateKind::TwoQubit: {
        int ue = config.uedge_of(gate.operands[0], gate.operands[1]);
        if (ue < 0)
            throw RouteError("two-qubit gate on non-adjacent qubits q" +
                             std::to_string(gate.operands[0]) + ", q" +
                             std::to_string(gate.operands[1]));
        res.push_back({K::Edge, ue});
        for (int ce : config.uedge_conflicts[static_cast<size_t>(ue)])
            res.push_back({K::Edge, ce});
        res.push_back({K::Qubit, gate.operands[0]});
        res.push_back({K::Qubit, gate.operands[1]});
        for (int dq : config.uedge_detuned[static_cast<size_t>(ue)])
            res.push_back({K::Qubit, dq});
        break;
    }
    }
    return res;
}

MachineState::MachineState(const HardwareConfig& config) {
    awg_count_ = static_cast<int>(config.awgs.size());
    feedline_count_ = static_cast<int>(config.feedlines.size());
    qubit_count_ = config.qubit_count;
    int total = awg_count_ + feedline_count_ + qubit_count_ +
                static_cast<int>(config.uedges.size());
    slots_.assign(static_cast<size_t>(total), {});
    for (const GateSpec& g : config.gates)
        max_duration_ = std::max<std::int64_t>(max_duration_, g.duration);
}

int MachineState::flat(ResourceId r) const {
    switch (r.kind) {
    case ResourceId::Kind::Awg: return r.index;
    case ResourceId::Kind::Feedline: return awg_count_ + r.index;
    case ResourceId::Kind::Qubit: return awg_count_ + feedline_count_ + r.index;
    case ResourceId::Kind::Edge:
        return awg_count_ + feedline_count_ + qubit_count_ + r.index;
    }
    return -1;
}

bool MachineState::is_free(const std::vector<ResourceId>& resources, int op_id,
                           std::int64_t t, std::int64_t duration) const {
    for (ResourceId r : resources) {
        const auto& list = slots_[static_cast<size_t>(flat(r))];
        bool shareable = r.kind == ResourceId::Kind::Awg ||
                         r.kind == ResourceId::Kind::Feedline;
        // Reservations arrive with non-decreasing t0, so scanning backward
        // can stop once t0 is too old to still overlap t.
        for (auto it = list.rbegin(); it != list.rend(); ++it) {
            if (it->t0 + max_duration_ <= t) break;
            if (it->t1 <= t || it->t0 >= t + duration) continue;
            if (shareable && it->op_id == op_id && it->t0 == t &&
                it->t1 == t + duration)
                continue;
            return false;
        }
    }
    return true;
}

void MachineState::reserve(const std::vector<ResourceId>& resources, int op_id,
                           std::int64_t t, std::int64_t duration) {
    for (ResourceId r : resources)
        slots_[static_cast<size_t>(flat(r))].push_back({t, t + duration, op_id});
}

void MachineState::clear() {
    for (auto& list : slots_) list.clear();
}

bool is_resource_free(const MachineState& state, const Gate& gate,
                      const HardwareConfig& config, std::int64_t t) {
    return state.is_free(resources_for(gate, config),
                         config.gate_index.at(gate.name), t,
                         config.gate_duration(gate.name));
}

void reserve_gate(MachineState& state, const Gate& gate,
                  const HardwareConfig& config, std::int64_t t) {
    state.reserve(resources_for(gate, config), config.gate_index.at(gate.name),
                  t, config.gate_duration(gate.name));
}

namespace {

struct GateInfo {
    std::vector<ResourceId> resources;
    int op_id = 0;
    std::int64_t duration = 0;
};

// Core list scheduler shared by the forward and backward passes. Available
// gates are kept sorted by (criticality desc, position asc); each cycle the
// first entry whose predecessors have finished and whose resources are free
// is started, without advancing time.
Schedule schedule_list(const Circuit& circuit, const Qodg& g,
                       const HardwareConfig& config) {
    int n = g.gate_count;
    Schedule sched;
    sched.start.assign(static_cast<size_t>(n), 0);
    if (n == 0) return sched;

    std::vector<GateInfo> info(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Gate& gate = circuit.gates[static_cast<size_t>(i)];
        info[static_cast<size_t>(i)] = {resources_for(gate, config),
                                        config.gate_index.at(gate.name),
                                        g.duration[static_cast<size_t>(i)]};
    }

    std::vector<int> waiting(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int p : g.pred[static_cast<size_t>(v)])
            if (p < n) waiting[static_cast<size_t>(v)]++;

    std::vector<std::int64_t> ready(static_cast<size_t>(n), 0);

    // (-criticality, position) ascending == criticality desc, position asc.
    using Key = std::pair<std::int64_t, int>;
    std::vector<std::pair<Key, int>> avail;
    auto push_avail = [&](int v) {
        Key key{-g.criticality[static_cast<size_t>(v)], g.position[static_cast<size_t>(v)]};
        auto it = std::lower_bound(avail.begin(), avail.end(),
                                   std::make_pair(key, v));
        avail.insert(it, {key, v});
    };
    for (int v = 0; v < n; ++v)
        if (waiting[static_cast<size_t>(v)] == 0) push_avail(v);

    MachineState state(config);
    std::int64_t t = 0;
    while (!avail.empty()) {
        bool started = false;
        for (size_t idx = 0; idx < avail.size(); ++idx) {
            int v = avail[idx].second;
            const GateInfo& gi = info[static_cast<size_t>(v)];
            if (ready[static_cast<size_t>(v)] > t) continue;
            if (!state.is_free(gi.resources, gi.op_id, t, gi.duration)) continue;
            state.reserve(gi.resources, gi.op_id, t, gi.duration);
            sched.start[static_cast<size_t>(v)] = t;
            sched.latency = std::max(sched.latency, t + gi.duration);
            avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
            for (int s : g.succ[static_cast<size_t>(v)]) {
                if (s >= n) continue;
                ready[static_cast<size_t>(s)] =
                    std::max(ready[static_cast<size_t>(s)], t + gi.duration);
                if (--waiting[static_cast<size_t>(s)] == 0) push_avail(s);
            }
            started = true;
            break;
        }
        if (!started) ++t;
    }
    return sched;
}

} // namespace

Schedule schedule_asap(const Circuit& circuit, const Qodg& qodg,
                       const HardwareConfig& config) {
    return schedule_list(circuit, qodg, config);
}

Schedule schedule_alap(const Circuit& circuit, const Qodg& qodg,
                       const HardwareConfig& config) {
    Schedule rev = schedule_list(circuit, reverse_qodg(qodg), config);
    Schedule out;
    out.start.assign(rev.start.size(), 0);
    out.latency = rev.latency;
    for (size_t i = 0; i < rev.start.size(); ++i)
        out.start[i] = rev.latency - rev.start[i] -
                       qodg.duration[i];
    return out;
}

std::int64_t asap_latency(const Circuit& circuit, const Qodg& qodg,
                          const HardwareConfig& config) {
    return schedule_list(circuit, qodg, config).latency;
}

ValidationReport validate_schedule(const Circuit& circuit, const Qodg& qodg,
                                   const Schedule& schedule,
                                   const HardwareConfig& config) {
    auto fail = [](const std::string& msg) {
        return ValidationReport{false, msg};
    };
    int n = qodg.gate_count;
    if (static_cast<int>(schedule.start.size()) != n)
        return fail("schedule covers " + std::to_string(schedule.start.size()) +
                    " gates, circuit has " + std::to_string(n));
    for (int v = 0; v < n; ++v) {
        if (schedule.start[static_cast<size_t>(v)] < 0)
            return fail("gate " + std::to_string(v) + " starts before cycle 0");
        for (int p : qodg.pred[static_cast<size_t>(v)]) {
            if (p >= n) continue;
            std::int64_t pend = schedule.start[static_cast<size_t>(p)] +
                                qodg.duration[static_cast<size_t>(p)];
            if (schedule.start[static_cast<size_t>(v)] < pend) {
                std::ostringstream os;
                os << "dependency violated: gate " << v << " starts at "
                   << schedule.start[static_cast<size_t>(v)] << " before gate "
                   << p << " finishes at " << pend;
                return fail(os.str());
            }
        }
    }
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return schedule.start[static_cast<size_t>(a)] <
               schedule.start[static_cast<size_t>(b)];
    });
    MachineState state(config);
    std::int64_t latency = 0;
    for (int v : order) {
        const Gate& gate = circuit.gates[static_cast<size_t>(v)];
        std::int64_t t = schedule.start[static_cast<size_t>(v)];
        std::int64_t d = qodg.duration[static_cast<size_t>(v)];
        auto res = resources_for(gate, config);
        int op_id = config.gate_index.at(gate.name);
        if (!state.is_free(res, op_id, t, d)) {
            std::ostringstream os;
            os << "resource conflict: gate " << v << " (" << gate.name
               << ") cannot hold its resources over [" << t << ", " << t + d
               << ")";
            return fail(os.str());
        }
        state.reserve(res, op_id, t, d);
        latency = std::max(latency, t + d);
    }
    if (latency != schedule.latency) {
        std::ostringstream os;
        os << "latency mismatch: schedule claims " << schedule.latency
           << ", gates end at " << latency;
        return fail(os.str());
    }
    return {};
}

} // namespace qmap
