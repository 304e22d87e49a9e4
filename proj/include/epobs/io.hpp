#pragma once

// Wire formats: graph6 (standard ASCII encoding, vertices in id order),
// DOT (undirected, labels as attributes) and a JSON schema carrying labels
// and construction roles.

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

#include "epobs/graph.hpp"

namespace epobs::io {

using json = nlohmann::json;

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw std::invalid_argument("graph6: graph too large");
    }
    int bit = 0;
    unsigned char cur = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            cur = static_cast<unsigned char>(cur << 1);
            if (g.has_edge(u, v)) cur |= 1;
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + cur));
                bit = 0;
                cur = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>(63 + (cur << (6 - bit))));
    return out;
}

inline Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
        return c - 63;
    };
    int n;
    if (!s.empty() && s[0] == '~') {
        ++pos;
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    } else {
        n = next();
    }
    std::vector<Edge> edges;
    int bit = 0, cur = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (bit == 0) {
                cur = next();
                bit = 6;
            }
            --bit;
            if ((cur >> bit) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (auto lab = g.label(v)) os << " [label=\"" << *lab << "\"]";
        os << ";\n";
    }
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

inline json to_json(const Graph& g, const json& roles = json::object()) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    json labels = json::object();
    for (const auto& [v, lab] : g.labels()) labels[std::to_string(v)] = lab;
    j["labels"] = std::move(labels);
    j["roles"] = roles;
    return j;
}

inline Graph from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::map<Vertex, std::string> labels;
    if (j.contains("labels"))
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it)
            labels[std::stoi(it.key())] = it.value().get<std::string>();
    return Graph(n, edges, labels);
}

} // namespace epobs::io
