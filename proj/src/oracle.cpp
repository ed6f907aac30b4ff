#include "qmap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qmap/error.hpp"
#include "qmap/rng.hpp"

namespace qmap {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::vector<cplx> rotation_matrix(char axis, int angle_deg) {
    double half = angle_deg * kPi / 360.0;
    cplx c = std::cos(half);
    cplx ms = cplx(0, -std::sin(half));
    if (axis == 'x') return {c, ms, ms, c};
    // exp(-i a/2 Y)
    double s = std::sin(half);
    return {c, cplx(-s, 0), cplx(s, 0), c};
}

std::vector<cplx> named_matrix(const std::string& name) {
    const cplx i(0, 1);
    if (name == "cz") return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    if (name == "z") return {1, 0, 0, -1};
    if (name == "h") return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    if (name == "s") return {1, 0, 0, i};
    if (name == "sdag") return {1, 0, 0, -i};
    if (name == "t") return {1, 0, 0, std::exp(i * (kPi / 4))};
    if (name == "tdag") return {1, 0, 0, std::exp(-i * (kPi / 4))};
    // Two-qubit matrices index the basis as |first operand, second operand>.
    if (name == "cnot")
        return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    if (name == "swap")
        return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    // move(a -> b): a's state lands on b, a is left in |0>. As a unitary:
    // |00>->|00>, |10>->|01>, |01>->|11>, |11>->|10>.
    if (name == "move")
        return {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0};
    throw OracleError("no matrix for gate '" + name + "'");
}

void apply_1q(StateVector& st, const std::vector<cplx>& m, int q) {
    std::size_t step = std::size_t(1) << q;
    for (std::size_t base = 0; base < st.amps.size(); base += 2 * step) {
        for (std::size_t k = 0; k < step; ++k) {
            cplx a0 = st.amps[base + k];
            cplx a1 = st.amps[base + k + step];
            st.amps[base + k] = m[0] * a0 + m[1] * a1;
            st.amps[base + k + step] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_2q(StateVector& st, const std::vector<cplx>& m, int qa, int qb) {
    // Matrix basis |a b> with a the high bit.
    std::size_t ba = std::size_t(1) << qa;
    std::size_t bb = std::size_t(1) << qb;
    for (std::size_t idx = 0; idx < st.amps.size(); ++idx) {
        if (idx & (ba | bb)) continue; // visit each 4-tuple once, from its 00 member
        std::size_t i00 = idx, i01 = idx | bb, i10 = idx | ba, i11 = idx | ba | bb;
        cplx a00 = st.amps[i00], a01 = st.amps[i01], a10 = st.amps[i10],
             a11 = st.amps[i11];
        st.amps[i00] = m[0] * a00 + m[1] * a01 + m[2] * a10 + m[3] * a11;
        st.amps[i01] = m[4] * a00 + m[5] * a01 + m[6] * a10 + m[7] * a11;
        st.amps[i10] = m[8] * a00 + m[9] * a01 + m[10] * a10 + m[11] * a11;
        st.amps[i11] = m[12] * a00 + m[13] * a01 + m[14] * a10 + m[15] * a11;
    }
}

} // namespace

StateVector StateVector::zero(int n) {
    StateVector st;
    st.n = n;
    st.amps.assign(std::size_t(1) << n, cplx(0, 0));
    st.amps[0] = 1;
    return st;
}

std::vector<cplx> gate_matrix(const std::string& name, const HardwareConfig& config) {
    if (const GateSpec* spec = config.find_gate(name)) {
        switch (spec->unitary.kind) {
        case UnitaryInfo::Kind::Rotation:
            return rotation_matrix(spec->unitary.axis, spec->unitary.angle_deg);
        case UnitaryInfo::Kind::Named:
            return named_matrix(spec->unitary.named);
        case UnitaryInfo::Kind::None:
            throw OracleError("gate '" + name + "' has no unitary");
        }
    }
    return named_matrix(name);
}

void apply_circuit(StateVector& state, const Circuit& circuit,
                   const HardwareConfig& config) {
    // Matrices cached per name; circuits repeat a small vocabulary.
    std::map<std::string, std::vector<cplx>> cache;
    for (const Gate& gate : circuit.gates) {
        auto it = cache.find(gate.name);
        if (it == cache.end())
            it = cache.emplace(gate.name, gate_matrix(gate.name, config)).first;
        const auto& m = it->second;
        if (gate.operands.size() == 1) {
            apply_1q(state, m, gate.operands[0]);
        } else {
            apply_2q(state, m, gate.operands[0], gate.operands[1]);
        }
    }
}

StateVector simulate(const Circuit& circuit, const HardwareConfig& config) {
    if (circuit.qubit_count > 12)
        throw OracleError("statevector capped at 12 qubits, got " +
                          std::to_string(circuit.qubit_count));
    StateVector st = StateVector::zero(circuit.qubit_count);
    apply_circuit(st, circuit, config);
    return st;
}

std::vector<cplx> unitary_of(const Circuit& circuit, const HardwareConfig& config) {
    if (circuit.qubit_count > 6)
        throw OracleError("unitary extraction capped at 6 qubits, got " +
                          std::to_string(circuit.qubit_count));
    std::size_t dim = std::size_t(1) << circuit.qubit_count;
    std::vector<cplx> u(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector st;
        st.n = circuit.qubit_count;
        st.amps.assign(dim, cplx(0, 0));
        st.amps[col] = 1;
        apply_circuit(st, circuit, config);
        for (std::size_t row = 0; row < dim; ++row) u[row * dim + col] = st.amps[row];
    }
    return u;
}

double trace_fidelity_error(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) return 1.0;
    std::size_t dim = 1;
    while (dim * dim < a.size()) ++dim;
    cplx tr(0, 0);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            tr += std::conj(a[c * dim + r]) * b[c * dim + r];
    return 1.0 - std::abs(tr) / static_cast<double>(dim);
}

bool equivalent(const Circuit& original, const Circuit& mapped,
                const std::vector<int>& initial_map, const std::vector<int>& final_map,
                const HardwareConfig& config, int trials, double tol,
                std::uint64_t seed) {
    if (original.qubit_count > 6)
        throw OracleError("equivalence check capped at 6 original qubits");
    for (const Circuit* c : {&original, &mapped})
        for (const Gate& g : c->gates)
            if (g.name == "measure")
                throw OracleError("equivalence check requires measurement-free circuits");

    int nv = original.qubit_count;
    if (static_cast<int>(initial_map.size()) != nv ||
        static_cast<int>(final_map.size()) != nv)
        throw OracleError("qubit maps must cover every original qubit");

    // Only simulate physical qubits the mapped side actually involves.
    std::set<int> touched_set(initial_map.begin(), initial_map.end());
    touched_set.insert(final_map.begin(), final_map.end());
    for (const Gate& g : mapped.gates)
        touched_set.insert(g.operands.begin(), g.operands.end());
    std::vector<int> touched(touched_set.begin(), touched_set.end());
    int np = static_cast<int>(touched.size());
    if (np > 16)
        throw OracleError("mapped circuit touches " + std::to_string(np) +
                          " qubits, beyond the simulation cap");
    std::map<int, int> slot;
    for (int i = 0; i < np; ++i) slot[touched[static_cast<size_t>(i)]] = i;

    Circuit compact = mapped;
    for (Gate& g : compact.gates)
        for (QubitId& q : g.operands) q = slot.at(q);
    compact.qubit_count = np;

    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        // Random product input, one Bloch vector per original qubit.
        std::vector<std::pair<cplx, cplx>> factors;
        factors.reserve(static_cast<size_t>(nv));
        for (int v = 0; v < nv; ++v) {
            double theta = kPi * (rng.next() >> 11) / 9007199254740992.0;
            double phi = 2 * kPi * (rng.next() >> 11) / 9007199254740992.0;
            factors.emplace_back(std::cos(theta / 2),
                                 std::exp(cplx(0, phi)) * std::sin(theta / 2));
        }

        StateVector virt;
        virt.n = nv;
        virt.amps.assign(std::size_t(1) << nv, cplx(1, 0));
        for (std::size_t idx = 0; idx < virt.amps.size(); ++idx)
            for (int v = 0; v < nv; ++v)
                virt.amps[idx] *= (idx >> v) & 1 ? factors[static_cast<size_t>(v)].second
                                                 : factors[static_cast<size_t>(v)].first;
        apply_circuit(virt, original, config);

        StateVector phys;
        phys.n = np;
        phys.amps.assign(std::size_t(1) << np, cplx(1, 0));
        for (std::size_t idx = 0; idx < phys.amps.size(); ++idx) {
            for (int p = 0; p < np; ++p) {
                bool one = (idx >> p) & 1;
                auto owner = std::find(initial_map.begin(), initial_map.end(),
                                       touched[static_cast<size_t>(p)]);
                if (owner == initial_map.end()) {
                    if (one) phys.amps[idx] = 0; // untouched ancillas start in |0>
                } else {
                    int v = static_cast<int>(owner - initial_map.begin());
                    phys.amps[idx] *= one ? factors[static_cast<size_t>(v)].second
                                          : factors[static_cast<size_t>(v)].first;
                }
            }
        }
        apply_circuit(phys, compact, config);

        // Expected physical state: the original's output with qubit v read
        // at final_map[v] and every other slot back in |0>.
        cplx inner(0, 0);
        for (std::size_t vidx = 0; vidx < virt.amps.size(); ++vidx) {
            std::size_t pidx = 0;
            for (int v = 0; v < nv; ++v)
                if ((vidx >> v) & 1)
                    pidx |= std::size_t(1) << slot.at(final_map[static_cast<size_t>(v)]);
            inner += std::conj(virt.amps[vidx]) * phys.amps[pidx];
        }
        if (std::abs(inner) < 1 - tol) return false;
    }
    return true;
}

} // namespace qmap
