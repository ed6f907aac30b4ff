#include "qmap/metrics.hpp"

#include <json.hpp>

#include "qmap/error.hpp"
#include "qmap/qodg.hpp"

namespace qmap {

std::int64_t circuit_depth(const Circuit& circuit, const HardwareConfig& config) {
    Qodg g = build_qodg(circuit, config, /*unit_durations=*/true);
    return g.criticality[static_cast<size_t>(g.source_node)];
}

std::int64_t dependency_latency(const Circuit& circuit, const HardwareConfig& config) {
    Qodg g = build_qodg(circuit, config);
    return g.criticality[static_cast<size_t>(g.source_node)];
}

CircuitStats stats(const Circuit& circuit, const Schedule* schedule,
                   const HardwareConfig& config, int swaps, int moves) {
    CircuitStats s;
    s.qubits = circuit.qubit_count;
    s.gates = static_cast<int>(circuit.gates.size());
    for (const Gate& gate : circuit.gates)
        if (gate.operands.size() == 2) s.two_qubit_gates++;
    s.depth = circuit_depth(circuit, config);
    s.latency = schedule != nullptr ? schedule->latency
                                    : dependency_latency(circuit, config);
    s.swaps = swaps;
    s.moves = moves;
    return s;
}

double overhead(double before, double after) {
    if (before == 0.0)
        throw Error("overhead undefined: baseline value is zero");
    return (after - before) / before;
}

namespace {

std::string number(double value) {
    return nlohmann::json(value).dump();
}

} // namespace

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::string out =
        "name,strategy,seed,latency,gates,czs,swaps,moves,time_s,"
        "latency_overhead,gate_overhead\n";
    for (const ReportRow& r : rows) {
        out += r.name + ',' + r.strategy + ',' + std::to_string(r.seed) + ',' +
               std::to_string(r.latency) + ',' + std::to_string(r.gates) + ',' +
               std::to_string(r.czs) + ',' + std::to_string(r.swaps) + ',' +
               std::to_string(r.moves) + ',' + number(r.time_s) + ',' +
               number(r.latency_overhead) + ',' + number(r.gate_overhead) + '\n';
    }
    return out;
}

std::string report_json(const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const ReportRow& r : rows) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["strategy"] = r.strategy;
        row["seed"] = r.seed;
        row["latency"] = r.latency;
        row["gates"] = r.gates;
        row["czs"] = r.czs;
        row["swaps"] = r.swaps;
        row["moves"] = r.moves;
        row["time_s"] = r.time_s;
        row["latency_overhead"] = r.latency_overhead;
        row["gate_overhead"] = r.gate_overhead;
        doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

} // namespace qmap
