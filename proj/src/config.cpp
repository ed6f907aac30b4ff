#include "qmap/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gate_names.hpp"
#include "qmap/error.hpp"
#include "surface17_embedded.hpp"

#include <json.hpp>

namespace qmap {

using nlohmann::json;

namespace {

Edge canonical(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string edge_key(const Edge& e) {
    return std::to_string(e.first) + "," + std::to_string(e.second);
}

Edge parse_edge_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
        throw ConfigError("bad edge key '" + key + "': expected \"src,dst\"");
    try {
        int a = std::stoi(key.substr(0, comma));
        int b = std::stoi(key.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw ConfigError("bad edge key '" + key + "': expected \"src,dst\"");
    }
}

std::string kind_name(GateKind k) {
    switch (k) {
    case GateKind::SingleQubitRotation: return "single_qubit_rotation";
    case GateKind::TwoQubit: return "two_qubit";
    case GateKind::Measurement: return "measurement";
    }
    return "?";
}

GateKind kind_from(const std::string& s) {
    if (s == "single_qubit_rotation") return GateKind::SingleQubitRotation;
    if (s == "two_qubit") return GateKind::TwoQubit;
    if (s == "measurement") return GateKind::Measurement;
    throw ConfigError("unknown gate kind '" + s + "'");
}

bool valid_angle(int a) {
    return a == 45 || a == -45 || a == 90 || a == -90 || a == 180 || a == -180;
}

// Fully expands a rule into primitive steps over the source gate's operand
// roles, rejecting cycles and unknown names.
void flatten_rule(const HardwareConfig& cfg, const std::string& name,
                  const std::vector<int>& roles,
                  std::vector<std::pair<const GateSpec*, std::vector<int>>>& out,
                  std::vector<std::string>& visiting) {
    if (const GateSpec* spec = cfg.find_gate(name)) {
        if (static_cast<int>(roles.size()) != spec->arity)
            throw ConfigError("decomposition step '" + name + "' expects " +
                              std::to_string(spec->arity) + " operands");
        out.emplace_back(spec, roles);
        return;
    }
    auto it = cfg.decompositions.find(name);
    if (it == cfg.decompositions.end())
        throw ConfigError("decomposition references unknown gate '" + name + "'");
    if (std::find(visiting.begin(), visiting.end(), name) != visiting.end())
        throw ConfigError("decomposition cycle through '" + name + "'");
    visiting.push_back(name);
    for (const auto& step : it->second.steps) {
        std::vector<int> mapped;
        mapped.reserve(step.roles.size());
        for (int r : step.roles) {
            if (r < 0 || r >= static_cast<int>(roles.size()))
                throw ConfigError("decomposition '" + name + "' uses operand role " +
                                  std::to_string(r) + " beyond its arity");
            mapped.push_back(roles[r]);
        }
        flatten_rule(cfg, step.gate, mapped, out, visiting);
    }
    visiting.pop_back();
}

int rule_arity(const DecompositionRule& rule) {
    int max_role = -1;
    for (const auto& step : rule.steps)
        for (int r : step.roles) max_role = std::max(max_role, r);
    return max_role + 1;
}

// Dependency-only critical path of an expanded primitive sequence.
int critical_path(const std::vector<std::pair<const GateSpec*, std::vector<int>>>& prims,
                  int arity) {
    std::vector<int> end(static_cast<size_t>(arity), 0);
    int total = 0;
    for (const auto& [spec, roles] : prims) {
        int start = 0;
        for (int r : roles) start = std::max(start, end[static_cast<size_t>(r)]);
        int finish = start + spec->duration;
        for (int r : roles) end[static_cast<size_t>(r)] = finish;
        total = std::max(total, finish);
    }
    return total;
}

void check_partition(const std::vector<std::vector<int>>& groups, int qubit_count,
                     const char* what) {
    std::vector<int> seen(static_cast<size_t>(qubit_count), 0);
    for (const auto& g : groups) {
        for (int q : g) {
            if (q < 0 || q >= qubit_count)
                throw ConfigError(std::string(what) + " references qubit " +
                                  std::to_string(q) + " out of range");
            seen[static_cast<size_t>(q)]++;
        }
    }
    for (int q = 0; q < qubit_count; ++q) {
        if (seen[static_cast<size_t>(q)] != 1)
            throw ConfigError("qubit " + std::to_string(q) + " must appear in exactly one " +
                              what + " group (found " +
                              std::to_string(seen[static_cast<size_t>(q)]) + ")");
    }
}

// Builds derived fields and runs every structural check.
void finalize(HardwareConfig& cfg) {
    if (cfg.qubit_count < 1) throw ConfigError("qubit_count must be >= 1");
    if (cfg.cycle_time_ns < 1) throw ConfigError("cycle_time_ns must be >= 1");

    cfg.gate_index.clear();
    for (size_t i = 0; i < cfg.gates.size(); ++i) {
        const GateSpec& g = cfg.gates[i];
        if (g.name.empty()) throw ConfigError("gate with empty name");
        if (!cfg.gate_index.emplace(g.name, static_cast<int>(i)).second)
            throw ConfigError("duplicate gate '" + g.name + "'");
        if (g.duration < 1)
            throw ConfigError("gate '" + g.name + "' has duration < 1");
        int want_arity = g.kind == GateKind::TwoQubit ? 2 : 1;
        if (g.arity != want_arity)
            throw ConfigError("gate '" + g.name + "' arity does not match its kind");
        if (g.kind == GateKind::SingleQubitRotation) {
            if (g.unitary.kind != UnitaryInfo::Kind::Rotation)
                throw ConfigError("rotation gate '" + g.name + "' needs axis/angle");
            if (g.unitary.axis != 'x' && g.unitary.axis != 'y')
                throw ConfigError("gate '" + g.name + "' has unsupported axis");
            if (!valid_angle(g.unitary.angle_deg))
                throw ConfigError("gate '" + g.name + "' has angle outside the primitive set");
        }
    }

    // Edge list: in-range, no self loops, unique, and symmetric.
    std::set<Edge> edge_set;
    for (const Edge& e : cfg.edges) {
        if (e.first < 0 || e.first >= cfg.qubit_count || e.second < 0 ||
            e.second >= cfg.qubit_count)
            throw ConfigError("edge (" + edge_key(e) + ") out of range");
        if (e.first == e.second)
            throw ConfigError("self edge (" + edge_key(e) + ")");
        if (!edge_set.insert(e).second)
            throw ConfigError("duplicate edge (" + edge_key(e) + ")");
    }
    for (const Edge& e : cfg.edges)
        if (!edge_set.count({e.second, e.first}))
            throw ConfigError("edge (" + edge_key(e) + ") listed without its reverse");

    cfg.adjacency.assign(static_cast<size_t>(cfg.qubit_count), {});
    cfg.uedges.clear();
    cfg.uedge_index.clear();
    for (const Edge& e : cfg.edges) {
        Edge c = canonical(e.first, e.second);
        if (!cfg.uedge_index.count(c)) {
            cfg.uedge_index[c] = 0; // real index assigned after sort
            cfg.uedges.push_back(c);
        }
    }
    std::sort(cfg.uedges.begin(), cfg.uedges.end());
    for (size_t i = 0; i < cfg.uedges.size(); ++i)
        cfg.uedge_index[cfg.uedges[i]] = static_cast<int>(i);
    for (const Edge& ue : cfg.uedges) {
        cfg.adjacency[static_cast<size_t>(ue.first)].push_back(ue.second);
        cfg.adjacency[static_cast<size_t>(ue.second)].push_back(ue.first);
    }
    for (auto& nbrs : cfg.adjacency) std::sort(nbrs.begin(), nbrs.end());

    check_partition(cfg.awgs, cfg.qubit_count, "awg");
    check_partition(cfg.feedlines, cfg.qubit_count, "feedline");
    cfg.awg_of.assign(static_cast<size_t>(cfg.qubit_count), -1);
    cfg.feedline_of.assign(static_cast<size_t>(cfg.qubit_count), -1);
    for (size_t a = 0; a < cfg.awgs.size(); ++a)
        for (int q : cfg.awgs[a]) cfg.awg_of[static_cast<size_t>(q)] = static_cast<int>(a);
    for (size_t f = 0; f < cfg.feedlines.size(); ++f)
        for (int q : cfg.feedlines[f])
            cfg.feedline_of[static_cast<size_t>(q)] = static_cast<int>(f);

    // Decomposition rules: known products, sane roles, acyclic; the critical
    // path of the expansion is the duration the dependency graph uses while
    // the alias is still composite.
    cfg.alias_duration.clear();
    for (const auto& [name, rule] : cfg.decompositions) {
        if (cfg.find_gate(name))
            throw ConfigError("decomposition '" + name + "' shadows a primitive gate");
        if (rule.steps.empty())
            throw ConfigError("decomposition '" + name + "' has no steps");
        int arity = rule_arity(rule);
        if (arity < 1 || arity > 2)
            throw ConfigError("decomposition '" + name + "' must use 1 or 2 operand roles");
        for (const auto& step : rule.steps) {
            std::set<int> uniq(step.roles.begin(), step.roles.end());
            if (uniq.size() != step.roles.size())
                throw ConfigError("decomposition '" + name + "' repeats an operand role");
        }
        std::vector<std::pair<const GateSpec*, std::vector<int>>> prims;
        std::vector<std::string> visiting;
        std::vector<int> identity(static_cast<size_t>(arity));
        for (int i = 0; i < arity; ++i) identity[static_cast<size_t>(i)] = i;
        flatten_rule(cfg, name, identity, prims, visiting);
        cfg.alias_duration[name] = critical_path(prims, arity);
    }

    // CZ tables: keys and values must name declared edges; spectators must be
    // real qubits distinct from the endpoints; the conflict relation must be
    // symmetric and both directions of an edge must agree.
    cfg.uedge_conflicts.assign(cfg.uedges.size(), {});
    cfg.uedge_detuned.assign(cfg.uedges.size(), {});
    for (const auto& [e, conflicts] : cfg.cz_edge_conflicts) {
        if (!edge_set.count(e))
            throw ConfigError("cz_edge_conflicts key (" + edge_key(e) + ") is not an edge");
        int ue = cfg.uedge_index.at(canonical(e.first, e.second));
        auto& bucket = cfg.uedge_conflicts[static_cast<size_t>(ue)];
        for (const Edge& c : conflicts) {
            if (!edge_set.count(c))
                throw ConfigError("cz_edge_conflicts value (" + edge_key(c) +
                                  ") is not an edge");
            Edge cc = canonical(c.first, c.second);
            if (cc != canonical(e.first, e.second))
                bucket.push_back(cfg.uedge_index.at(cc));
        }
    }
    for (auto& bucket : cfg.uedge_conflicts) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
    for (size_t ue = 0; ue < cfg.uedge_conflicts.size(); ++ue) {
        for (int other : cfg.uedge_conflicts[ue]) {
            const auto& back = cfg.uedge_conflicts[static_cast<size_t>(other)];
            if (!std::binary_search(back.begin(), back.end(), static_cast<int>(ue)))
                throw ConfigError("cz_edge_conflicts not symmetric between (" +
                                  edge_key(cfg.uedges[ue]) + ") and (" +
                                  edge_key(cfg.uedges[static_cast<size_t>(other)]) + ")");
        }
    }
    std::vector<char> detuned_set_seen(cfg.uedges.size(), 0);
    for (const auto& [e, qubits] : cfg.cz_detuned_qubits) {
        if (!edge_set.count(e))
            throw ConfigError("cz_detuned_qubits key (" + edge_key(e) + ") is not an edge");
        Edge c = canonical(e.first, e.second);
        int ue = cfg.uedge_index.at(c);
        std::vector<int> sorted = qubits;
        std::sort(sorted.begin(), sorted.end());
        for (int q : sorted) {
            if (q < 0 || q >= cfg.qubit_count)
                throw ConfigError("cz_detuned_qubits for (" + edge_key(e) +
                                  ") references qubit " + std::to_string(q) +
                                  " out of range");
            if (q == e.first || q == e.second)
                throw ConfigError("cz_detuned_qubits for (" + edge_key(e) +
                                  ") lists an endpoint as spectator");
        }
        auto& bucket = cfg.uedge_detuned[static_cast<size_t>(ue)];
        if (detuned_set_seen[static_cast<size_t>(ue)]) {
            if (bucket != sorted)
                throw ConfigError("cz_detuned_qubits for (" + edge_key(e) +
                                  ") disagrees with the reverse direction");
        } else {
            bucket = std::move(sorted);
            detuned_set_seen[static_cast<size_t>(ue)] = 1;
        }
    }
}

json unitary_to_json(const UnitaryInfo& u) {
    switch (u.kind) {
    case UnitaryInfo::Kind::None: return nullptr;
    case UnitaryInfo::Kind::Rotation:
        return json{{"axis", std::string(1, u.axis)}, {"angle", u.angle_deg}};
    case UnitaryInfo::Kind::Named: return json{{"named", u.named}};
    }
    return nullptr;
}

UnitaryInfo unitary_from_json(const json& j) {
    UnitaryInfo u;
    if (j.is_null()) return u;
    if (j.contains("named")) {
        u.kind = UnitaryInfo::Kind::Named;
        u.named = j.at("named").get<std::string>();
        return u;
    }
    u.kind = UnitaryInfo::Kind::Rotation;
    std::string axis = j.at("axis").get<std::string>();
    if (axis.size() != 1) throw ConfigError("unitary axis must be one character");
    u.axis = axis[0];
    u.angle_deg = j.at("angle").get<int>();
    return u;
}

} // namespace

const GateSpec* HardwareConfig::find_gate(const std::string& name) const {
    auto it = gate_index.find(name);
    return it == gate_index.end() ? nullptr : &gates[static_cast<size_t>(it->second)];
}

bool HardwareConfig::is_primitive(const std::string& name) const {
    return gate_index.count(name) > 0;
}

int HardwareConfig::gate_duration(const std::string& name) const {
    if (const GateSpec* spec = find_gate(name)) return spec->duration;
    auto it = alias_duration.find(name);
    if (it == alias_duration.end()) throw ConfigError("unknown gate '" + name + "'");
    return it->second;
}

int HardwareConfig::uedge_of(int a, int b) const {
    auto it = uedge_index.find(canonical(a, b));
    return it == uedge_index.end() ? -1 : it->second;
}

HardwareConfig load_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid config json: ") + e.what());
    }
    HardwareConfig cfg;
    try {
        for (const char* key :
             {"qubit_count", "cycle_time_ns", "gates", "edges", "decompositions",
              "awgs", "feedlines", "cz_edge_conflicts", "cz_detuned_qubits"}) {
            if (!j.contains(key))
                throw ConfigError(std::string("config missing key '") + key + "'");
        }
        cfg.qubit_count = j.at("qubit_count").get<int>();
        cfg.cycle_time_ns = j.at("cycle_time_ns").get<int>();
        for (const json& g : j.at("gates")) {
            GateSpec spec;
            spec.name = g.at("name").get<std::string>();
            spec.arity = g.at("arity").get<int>();
            spec.duration = g.at("duration").get<int>();
            spec.kind = kind_from(g.at("kind").get<std::string>());
            spec.unitary = unitary_from_json(g.at("unitary"));
            cfg.gates.push_back(std::move(spec));
        }
        for (const json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ConfigError("edges entries must be [src, dst] pairs");
            cfg.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        for (const auto& [name, steps] : j.at("decompositions").items()) {
            DecompositionRule rule;
            for (const json& s : steps) {
                DecompositionStep step;
                step.gate = s.at("gate").get<std::string>();
                for (const json& r : s.at("operands")) step.roles.push_back(r.get<int>());
                rule.steps.push_back(std::move(step));
            }
            cfg.decompositions.emplace(name, std::move(rule));
        }
        cfg.awgs = j.at("awgs").get<std::vector<std::vector<int>>>();
        cfg.feedlines = j.at("feedlines").get<std::vector<std::vector<int>>>();
        for (const auto& [key, value] : j.at("cz_edge_conflicts").items()) {
            std::vector<Edge> conflicts;
            for (const json& e : value) conflicts.emplace_back(e[0].get<int>(), e[1].get<int>());
            cfg.cz_edge_conflicts.emplace(parse_edge_key(key), std::move(conflicts));
        }
        for (const auto& [key, value] : j.at("cz_detuned_qubits").items())
            cfg.cz_detuned_qubits.emplace(parse_edge_key(key), value.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    finalize(cfg);
    return cfg;
}

std::string serialize_config(const HardwareConfig& cfg) {
    json j;
    j["qubit_count"] = cfg.qubit_count;
    j["cycle_time_ns"] = cfg.cycle_time_ns;
    json gates = json::array();
    for (const GateSpec& g : cfg.gates) {
        gates.push_back({{"name", g.name},
                         {"arity", g.arity},
                         {"duration", g.duration},
                         {"kind", kind_name(g.kind)},
                         {"unitary", unitary_to_json(g.unitary)}});
    }
    j["gates"] = std::move(gates);
    json edges = json::array();
    for (const Edge& e : cfg.edges) edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    json decomps = json::object();
    for (const auto& [name, rule] : cfg.decompositions) {
        json steps = json::array();
        for (const auto& step : rule.steps)
            steps.push_back({{"gate", step.gate}, {"operands", step.roles}});
        decomps[name] = std::move(steps);
    }
    j["decompositions"] = std::move(decomps);
    j["awgs"] = cfg.awgs;
    j["feedlines"] = cfg.feedlines;
    json conflicts = json::object();
    for (const auto& [e, list] : cfg.cz_edge_conflicts) {
        json arr = json::array();
        for (const Edge& c : list) arr.push_back({c.first, c.second});
        conflicts[edge_key(e)] = std::move(arr);
    }
    j["cz_edge_conflicts"] = std::move(conflicts);
    json detuned = json::object();
    for (const auto& [e, list] : cfg.cz_detuned_qubits) detuned[edge_key(e)] = list;
    j["cz_detuned_qubits"] = std::move(detuned);
    return j.dump(2) + "\n";
}

CzTables derive_cz_tables(int qubit_count, const std::vector<Edge>& directed_edges,
                          const std::vector<std::vector<int>>& freq_groups) {
    std::vector<int> group_of(static_cast<size_t>(qubit_count), -1);
    for (size_t g = 0; g < freq_groups.size(); ++g)
        for (int q : freq_groups[g]) group_of[static_cast<size_t>(q)] = static_cast<int>(g);
    for (int q = 0; q < qubit_count; ++q)
        if (group_of[static_cast<size_t>(q)] < 0)
            throw ConfigError("qubit " + std::to_string(q) + " missing from frequency groups");

    std::set<Edge> uedge_set;
    for (const Edge& e : directed_edges) uedge_set.insert(canonical(e.first, e.second));
    std::vector<Edge> uedges(uedge_set.begin(), uedge_set.end());

    std::vector<std::vector<int>> adj(static_cast<size_t>(qubit_count));
    for (const Edge& ue : uedges) {
        adj[static_cast<size_t>(ue.first)].push_back(ue.second);
        adj[static_cast<size_t>(ue.second)].push_back(ue.first);
    }

    // Spectators: neighbors of the detuned (higher-frequency) endpoint lying
    // in the partner's group, minus the partner itself.
    std::map<Edge, std::vector<int>> spectators;
    for (const Edge& ue : uedges) {
        int ga = group_of[static_cast<size_t>(ue.first)];
        int gb = group_of[static_cast<size_t>(ue.second)];
        if (std::abs(ga - gb) != 1)
            throw ConfigError("edge (" + edge_key(ue) +
                              ") does not connect adjacent frequency groups");
        int high = ga < gb ? ue.first : ue.second;
        int low = ga < gb ? ue.second : ue.first;
        std::vector<int> parked;
        for (int n : adj[static_cast<size_t>(high)])
            if (n != low && group_of[static_cast<size_t>(n)] == group_of[static_cast<size_t>(low)])
                parked.push_back(n);
        std::sort(parked.begin(), parked.end());
        spectators[ue] = std::move(parked);
    }

    // Two CZs conflict when the qubits one of them drives or parks overlap
    // the qubits the other drives or parks.
    auto touched = [&](const Edge& ue) {
        std::set<int> s{ue.first, ue.second};
        for (int q : spectators[ue]) s.insert(q);
        return s;
    };
    std::map<Edge, std::set<int>> touch;
    for (const Edge& ue : uedges) touch[ue] = touched(ue);

    CzTables tables;
    for (const Edge& dir : directed_edges) {
        Edge ue = canonical(dir.first, dir.second);
        std::vector<Edge> conflicts;
        conflicts.emplace_back(dir.second, dir.first); // same physical edge
        for (const Edge& other : uedges) {
            if (other == ue) continue;
            const auto& a = touch[ue];
            const auto& b = touch[other];
            bool overlap = std::any_of(a.begin(), a.end(),
                                       [&](int q) { return b.count(q) > 0; });
            if (overlap) {
                conflicts.emplace_back(other.first, other.second);
                conflicts.emplace_back(other.second, other.first);
            }
        }
        std::sort(conflicts.begin(), conflicts.end());
        tables.edge_conflicts[dir] = std::move(conflicts);
        tables.detuned[dir] = spectators[ue];
    }
    return tables;
}

std::string assemble_surface17_document() {
    // Distance-3 surface-code lattice: 17 qubits, 24 connections, three
    // frequency groups (top to bottom band ordering matches decreasing
    // frequency) and three readout feedlines cutting the chip diagonally.
    const std::vector<Edge> uedges = {
        {0, 2},  {0, 3},  {1, 4},  {1, 5},   {2, 5},   {2, 6},   {3, 6},   {4, 7},
        {5, 7},  {5, 8},  {6, 8},  {6, 9},   {7, 10},  {8, 10},  {8, 11},  {9, 11},
        {9, 12}, {10, 13}, {10, 14}, {11, 14}, {11, 15}, {12, 15}, {13, 16}, {14, 16}};
    const std::vector<std::vector<int>> awgs = {
        {1, 2, 3, 13, 14, 15}, {0, 4, 5, 6, 10, 11, 12, 16}, {7, 8, 9}};
    const std::vector<std::vector<int>> feedlines = {
        {0, 1, 2, 3}, {4, 5, 6, 7, 8, 9, 10, 11, 12}, {13, 14, 15, 16}};

    HardwareConfig cfg;
    cfg.qubit_count = 17;
    cfg.cycle_time_ns = 20;
    for (const auto& r : detail::kRotations) {
        GateSpec spec;
        spec.name = r.name;
        spec.arity = 1;
        spec.duration = 1;
        spec.kind = GateKind::SingleQubitRotation;
        spec.unitary.kind = UnitaryInfo::Kind::Rotation;
        spec.unitary.axis = r.axis;
        spec.unitary.angle_deg = r.angle_deg;
        cfg.gates.push_back(std::move(spec));
    }
    GateSpec cz;
    cz.name = "cz";
    cz.arity = 2;
    cz.duration = 2;
    cz.kind = GateKind::TwoQubit;
    cz.unitary.kind = UnitaryInfo::Kind::Named;
    cz.unitary.named = "cz";
    cfg.gates.push_back(std::move(cz));
    GateSpec measure;
    measure.name = "measure";
    measure.arity = 1;
    measure.duration = 15;
    measure.kind = GateKind::Measurement;
    cfg.gates.push_back(std::move(measure));

    auto rule = [](std::initializer_list<DecompositionStep> steps) {
        return DecompositionRule{std::vector<DecompositionStep>(steps)};
    };
    cfg.decompositions["z"] = rule({{"x", {0}}, {"y", {0}}});
    cfg.decompositions["h"] = rule({{"x", {0}}, {"rym90", {0}}});
    cfg.decompositions["t"] = rule({{"ry90", {0}}, {"rx45", {0}}, {"rym90", {0}}});
    cfg.decompositions["tdag"] = rule({{"ry90", {0}}, {"rxm45", {0}}, {"rym90", {0}}});
    cfg.decompositions["s"] = rule({{"ry90", {0}}, {"rx90", {0}}, {"rym90", {0}}});
    cfg.decompositions["sdag"] = rule({{"ry90", {0}}, {"rxm90", {0}}, {"rym90", {0}}});
    cfg.decompositions["cnot"] = rule({{"rym90", {1}}, {"cz", {0, 1}}, {"ry90", {1}}});
    cfg.decompositions["swap"] =
        rule({{"cnot", {0, 1}}, {"cnot", {1, 0}}, {"cnot", {0, 1}}});
    cfg.decompositions["move"] = rule({{"cnot", {0, 1}}, {"cnot", {1, 0}}});

    for (const Edge& ue : uedges) {
        cfg.edges.push_back(ue);
        cfg.edges.emplace_back(ue.second, ue.first);
    }
    std::sort(cfg.edges.begin(), cfg.edges.end());
    cfg.awgs = awgs;
    cfg.feedlines = feedlines;

    CzTables tables = derive_cz_tables(cfg.qubit_count, cfg.edges, awgs);
    cfg.cz_edge_conflicts = std::move(tables.edge_conflicts);
    cfg.cz_detuned_qubits = std::move(tables.detuned);

    return serialize_config(cfg);
}

const HardwareConfig& builtin_surface17() {
    static const HardwareConfig cfg = load_config(detail::surface17_json);
    return cfg;
}

} // namespace qmap
