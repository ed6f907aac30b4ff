#include <doctest.h>

#include <json.hpp>

#include "qmap/config.hpp"
#include "qmap/error.hpp"

using qmap::builtin_surface17;
using qmap::ConfigError;
using qmap::Edge;
using qmap::HardwareConfig;
using qmap::load_config;
using qmap::serialize_config;

namespace {

int uedge(const HardwareConfig& c, int a, int b) {
    int e = c.uedge_of(a, b);
    REQUIRE(e >= 0);
    return e;
}

nlohmann::json builtin_doc() {
    return nlohmann::json::parse(serialize_config(builtin_surface17()));
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("builtin processor shape") {
    const HardwareConfig& c = builtin_surface17();
    CHECK(c.qubit_count == 17);
    CHECK(c.cycle_time_ns == 20);
    CHECK(c.edges.size() == 48);
    CHECK(c.uedges.size() == 24);
    CHECK(c.awgs.size() == 3);
    CHECK(c.feedlines.size() == 3);
    CHECK(c.gates.size() == 14);
    CHECK(c.decompositions.size() == 9);
}

TEST_CASE("primitive durations") {
    const HardwareConfig& c = builtin_surface17();
    CHECK(c.gate_duration("x") == 1);
    CHECK(c.gate_duration("ry90") == 1);
    CHECK(c.gate_duration("cz") == 2);
    CHECK(c.gate_duration("measure") == 15);
}

TEST_CASE("alias durations are expansion critical paths") {
    const HardwareConfig& c = builtin_surface17();
    CHECK(c.gate_duration("h") == 2);
    CHECK(c.gate_duration("z") == 2);
    CHECK(c.gate_duration("t") == 3);
    CHECK(c.gate_duration("s") == 3);
    CHECK(c.gate_duration("cnot") == 4);
    CHECK(c.gate_duration("move") == 7);
    CHECK(c.gate_duration("swap") == 10);
    CHECK_THROWS_AS(c.gate_duration("nope"), qmap::Error);
}

TEST_CASE("primitive and alias classification") {
    const HardwareConfig& c = builtin_surface17();
    CHECK(c.is_primitive("x"));
    CHECK(c.is_primitive("cz"));
    CHECK(c.is_primitive("measure"));
    CHECK_FALSE(c.is_primitive("h"));
    CHECK_FALSE(c.is_primitive("cnot"));
    CHECK(c.find_gate("x") != nullptr);
    CHECK(c.find_gate("h") == nullptr);
}

TEST_CASE("adjacency and undirected edge lookup") {
    const HardwareConfig& c = builtin_surface17();
    CHECK(c.adjacent(0, 2));
    CHECK(c.adjacent(2, 0));
    CHECK_FALSE(c.adjacent(0, 1));
    CHECK_FALSE(c.adjacent(0, 0));
    CHECK(c.uedge_of(0, 1) == -1);
    CHECK(uedge(c, 0, 2) == uedge(c, 2, 0));
}

TEST_CASE("classical-control grouping") {
    const HardwareConfig& c = builtin_surface17();
    CHECK(c.awg_of[7] == c.awg_of[8]);
    CHECK(c.awg_of[8] == c.awg_of[9]);
    CHECK(c.awg_of[0] != c.awg_of[7]);
    CHECK(c.awg_of[1] == c.awg_of[2]);
    CHECK(c.feedline_of[13] == c.feedline_of[16]);
    CHECK(c.feedline_of[0] != c.feedline_of[13]);
}

TEST_CASE("cz detuned spectators") {
    const HardwareConfig& c = builtin_surface17();
    // Flux pulsing 3<->0 drags every other neighbor of 3 in qubit 0's
    // frequency group along: qubit 6 parks, qubit 2 (higher group) does not.
    const auto& d30 = c.uedge_detuned[static_cast<size_t>(uedge(c, 3, 0))];
    CHECK(d30 == std::vector<int>{6});
    const auto& d57 = c.uedge_detuned[static_cast<size_t>(uedge(c, 5, 7))];
    CHECK(d57 == std::vector<int>{8});
    const auto& d1316 = c.uedge_detuned[static_cast<size_t>(uedge(c, 13, 16))];
    CHECK(d1316 == std::vector<int>{10});
}

TEST_CASE("cz conflict table") {
    const HardwareConfig& c = builtin_surface17();
    const auto& conf = c.uedge_conflicts[static_cast<size_t>(uedge(c, 3, 0))];
    auto has = [&](int e) {
        return std::find(conf.begin(), conf.end(), e) != conf.end();
    };
    CHECK(has(uedge(c, 2, 5)));
    CHECK(has(uedge(c, 0, 2)));
    CHECK(has(uedge(c, 3, 6)));
    CHECK_FALSE(has(uedge(c, 13, 16)));
    CHECK_FALSE(has(uedge(c, 3, 0))); // an edge never conflicts with itself

    // Symmetry across the whole table.
    for (size_t e = 0; e < c.uedges.size(); ++e)
        for (int other : c.uedge_conflicts[e]) {
            const auto& back = c.uedge_conflicts[static_cast<size_t>(other)];
            CHECK(std::find(back.begin(), back.end(), static_cast<int>(e)) !=
                  back.end());
        }
}

TEST_CASE("directed conflict keys agree with both orientations") {
    const HardwareConfig& c = builtin_surface17();
    CHECK(c.cz_edge_conflicts.size() == 48);
    CHECK(c.cz_detuned_qubits.size() == 48);
    for (const Edge& e : c.edges) {
        Edge rev{e.second, e.first};
        CHECK(c.cz_detuned_qubits.at(e) == c.cz_detuned_qubits.at(rev));
    }
}

TEST_CASE("frozen document matches the generator") {
    CHECK(qmap::assemble_surface17_document() ==
          serialize_config(builtin_surface17()));
}

TEST_CASE("serialize/load round trip") {
    const HardwareConfig& c = builtin_surface17();
    HardwareConfig again = load_config(serialize_config(c));
    CHECK(again == c);
    CHECK(serialize_config(again) == serialize_config(c));
}

TEST_CASE("validation rejects broken documents") {
    auto expect_reject = [](nlohmann::json doc, const char* what) {
        INFO(what);
        CHECK_THROWS_AS(load_config(doc.dump()), ConfigError);
    };

    auto doc = builtin_doc();
    doc["gates"][0]["name"] = doc["gates"][1]["name"];
    expect_reject(doc, "duplicate gate name");

    doc = builtin_doc();
    doc["gates"][0]["duration"] = 0;
    expect_reject(doc, "zero duration");

    doc = builtin_doc();
    doc["edges"].push_back(nlohmann::json::array({0, 0}));
    expect_reject(doc, "self edge");

    doc = builtin_doc();
    doc["edges"].push_back(nlohmann::json::array({0, 99}));
    expect_reject(doc, "edge out of range");

    doc = builtin_doc();
    doc["awgs"][0].erase(0);
    expect_reject(doc, "awg grouping not a partition");

    doc = builtin_doc();
    doc["feedlines"][0].push_back(16);
    expect_reject(doc, "feedline grouping repeats a qubit");

    doc = builtin_doc();
    doc["decompositions"]["h"][0]["gate"] = "h";
    expect_reject(doc, "self-referential rewrite rule");

    doc = builtin_doc();
    doc["decompositions"]["x"] = doc["decompositions"]["h"];
    expect_reject(doc, "rule shadowing a primitive");

    doc = builtin_doc();
    doc["cz_detuned_qubits"]["0,3"].push_back(0);
    expect_reject(doc, "endpoint listed as its own spectator");
}

TEST_CASE("derived tables from a custom grouping") {
    // 4-qubit line 0-1-2-3, qubits {0,2} in the higher-frequency group.
    std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}};
    qmap::CzTables tables = qmap::derive_cz_tables(4, edges, {{0, 2}, {1, 3}});
    // Edge (0,1): higher endpoint 0 has no group-of-1 neighbor besides 1.
    CHECK(tables.detuned.at({0, 1}).empty());
    // Edge (1,2): higher endpoint 2 also neighbors 3 in 1's group.
    CHECK(tables.detuned.at({1, 2}) == std::vector<int>{3});
    CHECK(tables.detuned.at({2, 1}) == std::vector<int>{3});
    // Edge (2,3): higher endpoint 2 also neighbors 1 in 3's group.
    CHECK(tables.detuned.at({2, 3}) == std::vector<int>{1});
    // Adjacent edges always conflict through the shared endpoint, and
    // (0,1) conflicts with (2,3) because its endpoint 1 is (2,3)'s
    // spectator.
    const auto& conf = tables.edge_conflicts.at({0, 1});
    CHECK(std::find(conf.begin(), conf.end(), Edge{1, 2}) != conf.end());
    CHECK(std::find(conf.begin(), conf.end(), Edge{2, 3}) != conf.end());
}

} // TEST_SUITE
