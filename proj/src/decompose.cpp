#include "qmap/decompose.hpp"

#include <optional>

#include "gate_names.hpp"
#include "qmap/error.hpp"

namespace qmap {

namespace {

void expand(const Gate& gate, const HardwareConfig& config,
            const std::set<std::string>& keep, bool as_product,
            std::vector<Gate>& out) {
    if (config.is_primitive(gate.name) || keep.count(gate.name) != 0) {
        Gate g = gate;
        if (as_product) g.origin = GateOrigin::DecompositionProduct;
        out.push_back(std::move(g));
        return;
    }
    auto it = config.decompositions.find(gate.name);
    if (it == config.decompositions.end())
        throw ConfigError("no decomposition rule for gate '" + gate.name + "'");
    for (const DecompositionStep& step : it->second.steps) {
        Gate product;
        product.name = step.gate;
        for (int role : step.roles)
            product.operands.push_back(gate.operands[static_cast<size_t>(role)]);
        product.origin = GateOrigin::DecompositionProduct;
        expand(product, config, keep, true, out);
    }
}

} // namespace

Circuit decompose(const Circuit& circuit, const HardwareConfig& config,
                  const std::set<std::string>& keep) {
    Circuit out;
    out.name = circuit.name;
    out.qubit_count = circuit.qubit_count;
    for (const Gate& gate : circuit.gates)
        expand(gate, config, keep, false, out.gates);
    return out;
}

void append_decomposed(const Gate& gate, const HardwareConfig& config,
                       std::vector<Gate>& out) {
    expand(gate, config, {}, false, out);
}

namespace {

struct RotationInfo {
    char axis;
    int angle;
};

std::optional<RotationInfo> as_rotation(const Gate& gate) {
    if (gate.operands.size() != 1) return std::nullopt;
    for (const auto& r : detail::kRotations)
        if (gate.name == r.name) return RotationInfo{r.axis, r.angle_deg};
    return std::nullopt;
}

// Wraps into (-180, 180].
int normalize_angle(int deg) {
    deg %= 360;
    if (deg <= -180) deg += 360;
    if (deg > 180) deg -= 360;
    return deg;
}

} // namespace

Circuit optimize_1q(const Circuit& circuit) {
    std::vector<Gate> gates = circuit.gates;
    std::vector<bool> dead(gates.size(), false);

    std::vector<std::vector<int>> by_qubit(static_cast<size_t>(circuit.qubit_count));
    for (size_t i = 0; i < gates.size(); ++i)
        for (QubitId q : gates[i].operands)
            by_qubit[static_cast<size_t>(q)].push_back(static_cast<int>(i));

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& chain : by_qubit) {
            int prev = -1; // live rotation immediately before the cursor
            for (int idx : chain) {
                if (dead[static_cast<size_t>(idx)]) continue;
                auto rot = as_rotation(gates[static_cast<size_t>(idx)]);
                if (!rot) {
                    prev = -1;
                    continue;
                }
                if (prev < 0) {
                    prev = idx;
                    continue;
                }
                auto lead = as_rotation(gates[static_cast<size_t>(prev)]);
                if (lead->axis != rot->axis) {
                    prev = idx;
                    continue;
                }
                int sum = normalize_angle(lead->angle + rot->angle);
                if (sum == 0) {
                    dead[static_cast<size_t>(prev)] = true;
                    dead[static_cast<size_t>(idx)] = true;
                    prev = -1;
                    changed = true;
                } else if (auto merged = detail::rotation_name(lead->axis, sum)) {
                    gates[static_cast<size_t>(prev)].name = *merged;
                    dead[static_cast<size_t>(idx)] = true;
                    changed = true;
                } else {
                    prev = idx;
                }
            }
        }
    }

    Circuit out;
    out.name = circuit.name;
    out.qubit_count = circuit.qubit_count;
    for (size_t i = 0; i < gates.size(); ++i)
        if (!dead[i]) out.gates.push_back(gates[i]);
    return out;
}

} // namespace qmap
