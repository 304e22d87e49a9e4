#pragma once

// Certificate types shared by the constructions and the verification
// procedures, plus the report wrapper every decision procedure returns.

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epobs/graph.hpp"

namespace epobs {

using json = nlohmann::json;

enum class DisjointnessMode { vertex, edge };

inline const char* to_string(DisjointnessMode m) {
    return m == DisjointnessMode::vertex ? "vertex" : "edge";
}

// An a--b path together with a c--d path. In vertex mode the two paths are
// vertex-disjoint, in edge mode merely edge-disjoint.
struct Linkage {
    Path path_ab;
    Path path_cd;
    DisjointnessMode mode = DisjointnessMode::vertex;
};

// Witness for H <=_topological G: injective branch-vertex map plus one path
// per H-edge. edge_paths[{u,v}] (u < v) runs from branch_map[u] to
// branch_map[v].
struct SubdivisionModel {
    std::map<Vertex, Vertex> branch_map;
    std::map<Edge, Path> edge_paths;
};

struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;

    int width() const {
        size_t m = 0;
        for (const auto& b : bags) m = std::max(m, b.size());
        return static_cast<int>(m) - 1;
    }
};

enum class Verdict { holds, fails, witness, exhausted_no_witness, timeout };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::witness: return "witness";
        case Verdict::exhausted_no_witness: return "exhausted-no-witness";
        case Verdict::timeout: return "timeout";
    }
    return "?";
}

struct SearchStats {
    std::uint64_t nodes = 0;
    double wall_ms = 0; // informational; excluded from serialized reports
};

struct VerificationReport {
    std::string claim;
    json params = json::object();
    Verdict verdict = Verdict::fails;
    SearchStats stats;

    std::optional<Linkage> linkage;
    std::optional<std::pair<Linkage, Linkage>> linkage_pair;
    std::optional<SubdivisionModel> subdivision;
    std::optional<std::pair<SubdivisionModel, SubdivisionModel>> subdivision_pair;
    std::optional<PathDecomposition> decomposition;
    std::optional<EdgeSet> failing_edges; // counterexample edge set
    std::optional<int> value;             // e.g. largest certified h

    bool has_certificate() const {
        return linkage || linkage_pair || subdivision || subdivision_pair || decomposition ||
               failing_edges;
    }
};

namespace detail {

inline json path_to_json(const Path& p) { return json(p); }

inline json linkage_to_json(const Linkage& l) {
    return json{{"path_ab", l.path_ab}, {"path_cd", l.path_cd}, {"mode", to_string(l.mode)}};
}

inline json subdivision_to_json(const SubdivisionModel& m) {
    json bm = json::object(), ep = json::array();
    for (const auto& [h, g] : m.branch_map) bm[std::to_string(h)] = g;
    for (const auto& [e, p] : m.edge_paths) ep.push_back({{"edge", {e.u, e.v}}, {"path", p}});
    return json{{"branch_map", bm}, {"edge_paths", ep}};
}

} // namespace detail

// Deterministic serialization: no wall-clock fields, so byte-identical
// across runs with the same config and seed.
inline json to_json(const VerificationReport& r) {
    json j;
    j["claim"] = r.claim;
    j["params"] = r.params;
    j["verdict"] = to_string(r.verdict);
    j["nodes"] = r.stats.nodes;
    if (r.linkage) j["linkage"] = detail::linkage_to_json(*r.linkage);
    if (r.linkage_pair)
        j["linkage_pair"] = {detail::linkage_to_json(r.linkage_pair->first),
                             detail::linkage_to_json(r.linkage_pair->second)};
    if (r.subdivision) j["subdivision"] = detail::subdivision_to_json(*r.subdivision);
    if (r.subdivision_pair)
        j["subdivision_pair"] = {detail::subdivision_to_json(r.subdivision_pair->first),
                                 detail::subdivision_to_json(r.subdivision_pair->second)};
    if (r.decomposition) j["decomposition"] = json{{"bags", r.decomposition->bags}};
    if (r.failing_edges) {
        json xs = json::array();
        for (const Edge& e : *r.failing_edges) xs.push_back({e.u, e.v});
        j["failing_edges"] = std::move(xs);
    }
    if (r.value) j["value"] = *r.value;
    return j;
}

} // namespace epobs
