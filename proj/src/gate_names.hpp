#pragma once

// Shared tables for the fixed gate vocabulary: canonical primitive names,
// composite aliases, and the spellings the parser accepts for each.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmap::detail {

struct RotationName {
    const char* name;
    char axis;
    int angle_deg;
};

// The 180-degree rotations go by their Pauli names; everything else is
// axis + signed angle with 'm' for minus.
inline constexpr RotationName kRotations[] = {
    {"rx45", 'x', 45},  {"rxm45", 'x', -45},  {"rx90", 'x', 90},
    {"rxm90", 'x', -90}, {"x", 'x', 180},      {"rxm180", 'x', -180},
    {"ry45", 'y', 45},  {"rym45", 'y', -45},  {"ry90", 'y', 90},
    {"rym90", 'y', -90}, {"y", 'y', 180},      {"rym180", 'y', -180},
};

// Composite gates understood by the frontend; all rewrite to primitives.
inline constexpr std::pair<const char*, int> kAliases[] = {
    {"z", 1},    {"h", 1},    {"t", 1},    {"tdag", 1}, {"s", 1},
    {"sdag", 1}, {"cnot", 2}, {"swap", 2}, {"move", 2},
};

// Alternate spellings accepted on input, normalized before anything else
// sees the name.
inline constexpr std::pair<const char*, const char*> kSpellings[] = {
    {"rx180", "x"},      {"ry180", "y"},      {"rx-45", "rxm45"},
    {"rx-90", "rxm90"},  {"rx-180", "rxm180"}, {"ry-45", "rym45"},
    {"ry-90", "rym90"},  {"ry-180", "rym180"},
};

inline std::optional<int> fixed_arity(const std::string& name) {
    for (const auto& r : kRotations)
        if (name == r.name) return 1;
    for (const auto& [alias, arity] : kAliases)
        if (name == alias) return arity;
    if (name == "cz") return 2;
    if (name == "measure") return 1;
    return std::nullopt;
}

inline std::string normalize_spelling(std::string name) {
    for (const auto& [from, to] : kSpellings)
        if (name == from) return to;
    return name;
}

/// Canonical gate name for a rotation with `angle` in (-180, 180], or
/// nullopt when the angle is not in the primitive set.
inline std::optional<std::string> rotation_name(char axis, int angle) {
    for (const auto& r : kRotations)
        if (r.axis == axis && r.angle_deg == angle) return std::string(r.name);
    return std::nullopt;
}

} // namespace qmap::detail
