#pragma once

// Simple undirected graphs with dense vertex ids and optional labels.
// Graphs are immutable after construction; all ops return new values.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epobs {

using Vertex = int;

// Unordered vertex pair, normalized so u <= v.
struct Edge {
    Vertex u, v;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}
    bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
};

using VertexSet = std::set<Vertex>;
using EdgeSet = std::set<Edge>;

// Ordered vertex sequence; validity against a host graph is checked on demand.
using Path = std::vector<Vertex>;

class Graph {
public:
    Graph() = default;

    explicit Graph(int n, const std::vector<Edge>& edges = {},
                   std::map<Vertex, std::string> labels = {})
        : n_(n), adj_(static_cast<size_t>(n)), labels_(std::move(labels)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (const auto& e : edges) add_edge_internal(e.u, e.v);
        finalize();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nu = adj_[static_cast<size_t>(u)];
        return std::binary_search(nu.begin(), nu.end(), v);
    }

    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<std::string> label(Vertex v) const {
        auto it = labels_.find(v);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<Vertex, std::string>& labels() const { return labels_; }

    void check_vertex(Vertex v) const {
        if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    }

    void check_edge(const Edge& e) const {
        if (!has_edge(e.u, e.v))
            throw std::invalid_argument("unknown edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
    }

private:
    friend class GraphBuilder;

    void add_edge_internal(Vertex u, Vertex v) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("edge endpoint out of range");
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }

    void finalize() {
        for (auto& nb : adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("parallel edge");
        }
        edges_.clear();
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[static_cast<size_t>(u)])
                if (u < v) edges_.emplace_back(u, v);
    }

    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
    std::map<Vertex, std::string> labels_;
};

// Incremental construction helper; produces an immutable Graph.
class GraphBuilder {
public:
    Vertex add_vertex(std::string label = {}) {
        Vertex v = n_++;
        if (!label.empty()) labels_[v] = std::move(label);
        return v;
    }

    void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

    bool has_pending_edge(Vertex u, Vertex v) const {
        Edge e(u, v);
        return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
    }

    int vertex_count() const { return n_; }

    Graph build() const { return Graph(n_, edges_, labels_); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<Vertex, std::string> labels_;
};

namespace detail {

inline void check_removed(const Graph& g, const VertexSet& rv, const EdgeSet& re) {
    for (Vertex v : rv) g.check_vertex(v);
    for (const Edge& e : re) g.check_edge(e);
}

} // namespace detail

// Connected components of g minus removed vertices/edges.
// Parts are listed with vertices ascending; parts ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& removed_vertices = {},
                                                   const EdgeSet& removed_edges = {}) {
    detail::check_removed(g, removed_vertices, removed_edges);
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<size_t>(n), 0);
    for (Vertex v : removed_vertices) gone[static_cast<size_t>(v)] = 1;
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<Vertex>> parts;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (gone[static_cast<size_t>(s)] || comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(parts.size());
        parts.emplace_back();
        stack.push_back(s);
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            parts[static_cast<size_t>(id)].push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (gone[static_cast<size_t>(w)] || comp[static_cast<size_t>(w)] >= 0) continue;
                if (removed_edges.count(Edge(u, w))) continue;
                comp[static_cast<size_t>(w)] = id;
                stack.push_back(w);
            }
        }
        std::sort(parts.back().begin(), parts.back().end());
    }
    return parts;
}

struct SuppressResult {
    Graph graph;
    std::map<Vertex, Vertex> old_to_new; // covers all surviving vertices
};

// Replaces every maximal path whose interior vertices have degree 2 and are
// not in `keep` by a single edge. Fails loudly if the contraction would
// create a parallel edge or a self-loop (cycle of suppressed vertices).
inline SuppressResult suppress_degree_two(const Graph& g, const VertexSet& keep = {}) {
    for (Vertex v : keep) g.check_vertex(v);
    const int n = g.vertex_count();
    std::vector<char> kept(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != 2 || keep.count(v)) kept[static_cast<size_t>(v)] = 1;

    // Walk from every kept vertex through suppressed chains. Each chain
    // between kept ends is traversed exactly twice, once per end.
    std::vector<Edge> traversals;
    for (Vertex v = 0; v < n; ++v) {
        if (!kept[static_cast<size_t>(v)]) continue;
        for (Vertex w : g.neighbors(v)) {
            Vertex prev = v, cur = w;
            while (!kept[static_cast<size_t>(cur)]) {
                const auto& nb = g.neighbors(cur);
                Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (cur == v)
                throw std::runtime_error("suppress_degree_two: contraction yields a self-loop");
            traversals.emplace_back(v, cur);
        }
    }
    std::sort(traversals.begin(), traversals.end());
    std::vector<Edge> result_edges;
    for (size_t i = 0; i < traversals.size(); i += 2) {
        if (i + 1 >= traversals.size() || !(traversals[i] == traversals[i + 1]))
            throw std::runtime_error("suppress_degree_two: unpaired chain traversal");
        result_edges.push_back(traversals[i]);
    }

    GraphBuilder out;
    std::map<Vertex, Vertex> remap;
    for (Vertex v = 0; v < n; ++v)
        if (kept[static_cast<size_t>(v)]) {
            auto lab = g.label(v);
            remap[v] = out.add_vertex(lab ? *lab : std::string{});
        }
    std::set<Edge> seen;
    for (const Edge& e : result_edges) {
        Edge ne(remap.at(e.u), remap.at(e.v));
        if (!seen.insert(ne).second)
            throw std::runtime_error("suppress_degree_two: contraction yields a parallel edge");
        out.add_edge(ne.u, ne.v);
    }
    return SuppressResult{out.build(), std::move(remap)};
}

// Exact degree multiset, ascending.
inline std::vector<int> degree_profile(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

inline bool is_simple_path(const Graph& g, const Path& p) {
    if (p.empty()) return false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (!g.has_vertex(p[i])) return false;
        if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
    }
    if (p.size() <= 32) { // short paths: quadratic scan beats a set
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] == p[j]) return false;
        return true;
    }
    std::set<Vertex> seen;
    for (Vertex v : p)
        if (!seen.insert(v).second) return false;
    return true;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

} // namespace epobs
