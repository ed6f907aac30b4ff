#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"

namespace qmap {

using cplx = std::complex<double>;

/// Dense statevector over n qubits, qubit 0 at the least significant bit.
struct StateVector {
    int n = 0;
    std::vector<cplx> amps; // size 1 << n

    static StateVector zero(int n);
};

/// Matrix of a single gate by name: the 2x2 or 4x4 (row-major) unitary.
/// Primitives come from their config descriptor; composite names (h, t,
/// cnot, swap, move, ...) come from a built-in table that is independent of
/// the config's rewrite rules, so decompositions can be checked against it.
/// Throws OracleError for measurement or unknown names.
std::vector<cplx> gate_matrix(const std::string& name, const HardwareConfig& config);

/// Applies circuit gates in order to the state (in place).
void apply_circuit(StateVector& state, const Circuit& circuit,
                   const HardwareConfig& config);

/// Runs the circuit on |0...0>. Capped at 12 qubits.
StateVector simulate(const Circuit& circuit, const HardwareConfig& config);

/// Full unitary by simulating each basis column. Row-major, dim 2^n; capped
/// at 6 qubits.
std::vector<cplx> unitary_of(const Circuit& circuit, const HardwareConfig& config);

/// 1 - |tr(A^dag B)| / dim: zero iff A and B agree up to global phase.
double trace_fidelity_error(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// Checks that the mapped circuit (physical operands) implements the
/// original circuit (virtual operands) given where each virtual qubit
/// starts (initial_map) and ends up (final_map). Runs `trials` random
/// product states through both sides and compares up to global phase;
/// every trial must reach fidelity > 1 - tol. Only the qubits the mapped
/// circuit touches are simulated. Measurement-free circuits only; the
/// original must have at most 6 qubits.
bool equivalent(const Circuit& original, const Circuit& mapped,
                const std::vector<int>& initial_map, const std::vector<int>& final_map,
                const HardwareConfig& config, int trials = 20, double tol = 1e-9,
                std::uint64_t seed = 0x5eed);

} // namespace qmap
