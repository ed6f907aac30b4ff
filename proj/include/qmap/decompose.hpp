#pragma once

#include <set>
#include <string>
#include <vector>

#include "qmap/circuit.hpp"
#include "qmap/config.hpp"

namespace qmap {

// Rewrites alias gates into primitives using the config rules, recursively.
// Names listed in `keep` stay composite; the router keeps cnot/swap/move
// whole so movement costs stay countable. Throws ConfigError when a
// non-primitive gate has no rule.
Circuit decompose(const Circuit& circuit, const HardwareConfig& config,
                  const std::set<std::string>& keep = {});

// Appends the full primitive expansion of one gate to `out`.
void append_decomposed(const Gate& gate, const HardwareConfig& config,
                       std::vector<Gate>& out);

// Merges runs of adjacent same-axis rotations per qubit (angles mod 360 into
// (-180, 180]), deletes zero rotations, skips merges whose sum leaves the
// primitive angle set, and repeats to a fixed point. The merged gate keeps
// the first gate's position and origin.
Circuit optimize_1q(const Circuit& circuit);

} // namespace qmap
