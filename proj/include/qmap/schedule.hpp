#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"
#include "qmap/qodg.hpp"

namespace qmap {

struct ResourceId {
    enum class Kind { Awg, Feedline, Qubit, Edge };
    Kind kind;
    int index;
    bool operator==(const ResourceId&) const = default;
};

// Resources a primitive gate occupies while executing. Two-qubit gates claim
// their own edge, every conflicting edge, both operands, and the detuned
// spectator qubits. Throws if the gate is an alias or its operands are not
// adjacent in the topology.
std::vector<ResourceId> resources_for(const Gate& gate, const HardwareConfig& config);

// Interval reservations per resource. Overlap is allowed only on awg and
// feedline resources, and only for reservations with the same operation name
// and an identical interval.
class MachineState {
public:
    explicit MachineState(const HardwareConfig& config);

    bool is_free(const std::vector<ResourceId>& resources, int op_id,
                 std::int64_t t, std::int64_t duration) const;
    void reserve(const std::vector<ResourceId>& resources, int op_id,
                 std::int64_t t, std::int64_t duration);
    void clear();

private:
    int flat(ResourceId r) const;

    struct Slot {
        std::int64_t t0;
        std::int64_t t1;
        int op_id;
    };
    std::vector<std::vector<Slot>> slots_;
    int awg_count_ = 0;
    int feedline_count_ = 0;
    int qubit_count_ = 0;
    std::int64_t max_duration_ = 1;
};

bool is_resource_free(const MachineState& state, const Gate& gate,
                      const HardwareConfig& config, std::int64_t t);
void reserve_gate(MachineState& state, const Gate& gate,
                  const HardwareConfig& config, std::int64_t t);

struct Schedule {
    std::vector<std::int64_t> start; // indexed by gate id
    std::int64_t latency = 0;
};

// Forward list scheduling: per cycle, repeatedly start the most critical
// resource-free gate (ties: earliest circuit position); advance time only
// when nothing fits. Gates must be primitives.
Schedule schedule_asap(const Circuit& circuit, const Qodg& qodg,
                       const HardwareConfig& config);

// Same algorithm on the reversed dependency graph, mapped back so the
// earliest start is cycle 0.
Schedule schedule_alap(const Circuit& circuit, const Qodg& qodg,
                       const HardwareConfig& config);

std::int64_t asap_latency(const Circuit& circuit, const Qodg& qodg,
                          const HardwareConfig& config);

struct ValidationReport {
    bool ok = true;
    std::string message;
};

// Independent checker: dependency edges respected and a full reservation
// replay stays conflict-free. Reports the first violation found.
ValidationReport validate_schedule(const Circuit& circuit, const Qodg& qodg,
                                   const Schedule& schedule,
                                   const HardwareConfig& config);

} // namespace qmap
