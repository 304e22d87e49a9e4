#pragma once

// Graph families and counterexample instances: condensed walls, ladders,
// grids, complete binary trees, the two counterexample constructions (ladder
// pattern and tree pattern), their structural validators, and a reference
// embedding of the pattern that survives small edge deletions.

#include <array>
#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "epobs/certificates.hpp"
#include "epobs/graph.hpp"
#include "epobs/tree_analysis.hpp"

namespace epobs {

// ------------------------------------------------------------ condensed wall

// Size-r condensed wall: r horizontal paths u^j_1..u^j_{2r}, connector
// vertices z^0..z^r forming a spine, and hub vertices a (left), b (right).
// Terminals are a, b, c = z^0, d = z^r.
struct CondensedWall {
    Graph graph;
    int size_r = 0;
    Vertex a = -1, b = -1, c = -1, d = -1;
    std::vector<Vertex> z; // z[0..r]

    Vertex u(int j, int i) const { // j in 1..r, i in 1..2r
        return (j - 1) * 2 * size_r + (i - 1);
    }

    Path row_path(int j) const {
        Path p;
        for (int i = 1; i <= 2 * size_r; ++i) p.push_back(u(j, i));
        return p;
    }

    std::vector<Vertex> layer_vertices(int j) const {
        std::vector<Vertex> vs = row_path(j);
        vs.push_back(z[j - 1]);
        vs.push_back(z[j]);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    // Edge group of layer j: its row, its connector edges, its hub edges and
    // its spine edge. The r groups partition a superset of E(W) relevant to
    // rerouting; no edge lies in two groups.
    EdgeSet layer_group(int j) const {
        EdgeSet es;
        for (int i = 1; i < 2 * size_r; ++i) es.insert(Edge(u(j, i), u(j, i + 1)));
        for (int i = 1; i <= size_r; ++i) {
            es.insert(Edge(z[j - 1], u(j, 2 * i)));
            es.insert(Edge(z[j], u(j, 2 * i - 1)));
        }
        es.insert(Edge(a, u(j, 1)));
        es.insert(Edge(b, u(j, 2 * size_r)));
        es.insert(Edge(z[j - 1], z[j]));
        return es;
    }
};

inline CondensedWall build_condensed_wall(int r) {
    if (r < 1) throw std::invalid_argument("build_condensed_wall: need r >= 1");
    CondensedWall w;
    w.size_r = r;
    GraphBuilder b;
    for (int j = 1; j <= r; ++j)
        for (int i = 1; i <= 2 * r; ++i)
            b.add_vertex("u^" + std::to_string(j) + "_" + std::to_string(i));
    for (int j = 0; j <= r; ++j) w.z.push_back(b.add_vertex("z^" + std::to_string(j)));
    w.a = b.add_vertex("a");
    w.b = b.add_vertex("b");
    w.c = w.z.front();
    w.d = w.z.back();
    for (int j = 1; j <= r; ++j) {
        for (int i = 1; i < 2 * r; ++i) b.add_edge(w.u(j, i), w.u(j, i + 1));
        for (int i = 1; i <= r; ++i) {
            b.add_edge(w.z[j - 1], w.u(j, 2 * i));
            b.add_edge(w.z[j], w.u(j, 2 * i - 1));
        }
        b.add_edge(w.a, w.u(j, 1));
        b.add_edge(w.b, w.u(j, 2 * r));
    }
    for (int i = 1; i <= r; ++i) b.add_edge(w.z[i - 1], w.z[i]);
    w.graph = b.build();
    return w;
}

// ------------------------------------------------------------------- ladder

struct LadderInstance {
    Graph graph;
    int length = 0;
    Vertex u(int i) const { return 2 * (i - 1); }     // i in 1..length
    Vertex v(int i) const { return 2 * (i - 1) + 1; }

    VertexSet branch_set() const { // degree-3 vertices
        VertexSet s;
        for (Vertex x = 0; x < graph.vertex_count(); ++x)
            if (graph.degree(x) >= 3) s.insert(x);
        return s;
    }
};

inline LadderInstance build_ladder(int length) {
    if (length < 1) throw std::invalid_argument("build_ladder: need length >= 1");
    LadderInstance L;
    L.length = length;
    GraphBuilder b;
    for (int i = 1; i <= length; ++i) {
        b.add_vertex("u_" + std::to_string(i));
        b.add_vertex("v_" + std::to_string(i));
    }
    for (int i = 1; i <= length; ++i) {
        b.add_edge(L.u(i), L.v(i));
        if (i < length) {
            b.add_edge(L.u(i), L.u(i + 1));
            b.add_edge(L.v(i), L.v(i + 1));
        }
    }
    L.graph = b.build();
    return L;
}

// --------------------------------------------------------------------- grid

// 4r x 4r grid with terminal sets on the boundary: A on the left column and
// B on the second-to-last column (middle rows), D the bottom row, C the top
// row.
struct GridLinkageInstance {
    Graph graph;
    int size_r = 0;
    VertexSet A, B, C, D;

    int side() const { return 4 * size_r; }
    Vertex at(int row, int col) const { // 1-based
        return (row - 1) * side() + (col - 1);
    }
};

inline GridLinkageInstance build_grid_instance(int r) {
    if (r < 1) throw std::invalid_argument("build_grid_instance: need r >= 1");
    GridLinkageInstance g;
    g.size_r = r;
    int n = 4 * r;
    GraphBuilder b;
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col)
            b.add_vertex("g_" + std::to_string(row) + "_" + std::to_string(col));
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col) {
            if (col < n) b.add_edge(g.at(row, col), g.at(row, col + 1));
            if (row < n) b.add_edge(g.at(row, col), g.at(row + 1, col));
        }
    g.graph = b.build();
    for (int row = 2; row <= n - 1; ++row) {
        g.A.insert(g.at(row, 1));
        g.B.insert(g.at(row, n - 1));
    }
    for (int col = 1; col <= n; ++col) {
        g.D.insert(g.at(1, col));
        g.C.insert(g.at(n, col));
    }
    return g;
}

// ------------------------------------------------------------- binary trees

struct BhTree {
    Graph graph;
    Vertex root = 0;
    int height = 0;
    Vertex attachment = 0; // free end of the link path; == root without one
};

// Complete binary tree of height h, vertices in heap order (root 0).
inline BhTree build_binary_tree(int h) {
    if (h < 0) throw std::invalid_argument("build_binary_tree: negative height");
    BhTree t;
    t.height = h;
    int n = (1 << (h + 1)) - 1;
    GraphBuilder b;
    for (int v = 0; v < n; ++v) b.add_vertex();
    for (int v = 1; v < n; ++v) b.add_edge((v - 1) / 2, v);
    t.graph = b.build();
    return t;
}

// Attach a path of `link_len` edges to the root; the far end is the
// attachment vertex of the resulting linked tree.
inline BhTree v_link(const BhTree& t, int link_len) {
    if (link_len < 0) throw std::invalid_argument("v_link: negative length");
    BhTree out = t;
    if (link_len == 0) return out;
    GraphBuilder b;
    for (Vertex v = 0; v < t.graph.vertex_count(); ++v) {
        auto lab = t.graph.label(v);
        b.add_vertex(lab ? *lab : std::string{});
    }
    for (const Edge& e : t.graph.edges()) b.add_edge(e.u, e.v);
    Vertex prev = t.root;
    for (int i = 0; i < link_len; ++i) {
        Vertex nv = b.add_vertex();
        b.add_edge(prev, nv);
        prev = nv;
    }
    out.graph = b.build();
    out.attachment = prev;
    return out;
}

// Replace every edge by a path with k interior vertices.
inline Graph subdivide_all_edges(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("subdivide_all_edges: negative count");
    GraphBuilder b;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto lab = g.label(v);
        b.add_vertex(lab ? *lab : std::string{});
    }
    for (const Edge& e : g.edges()) {
        Vertex prev = e.u;
        for (int i = 0; i < k; ++i) {
            Vertex nv = b.add_vertex();
            b.add_edge(prev, nv);
            prev = nv;
        }
        b.add_edge(prev, e.v);
    }
    return b.build();
}

// ------------------------------------------------------- pattern path split

inline VertexSet branch_vertices(const Graph& g) {
    VertexSet s;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) s.insert(v);
    return s;
}

struct PatternPaths {
    std::vector<Path> u_paths;  // endpoints in U, interiors outside U
    std::vector<Path> pendants; // from a U-vertex to a dead end
};

// Maximal paths of g whose endpoints lie in U and whose interior vertices
// avoid U; paths running from U into a leaf are reported separately.
inline PatternPaths split_into_u_paths(const Graph& g, const VertexSet& U) {
    PatternPaths out;
    for (Vertex s : U) {
        for (Vertex x : g.neighbors(s)) {
            Path p{s, x};
            Vertex prev = s, cur = x;
            bool pendant = false;
            while (!U.count(cur)) {
                if (g.degree(cur) == 1) {
                    pendant = true;
                    break;
                }
                if (g.degree(cur) != 2)
                    throw std::invalid_argument("split_into_u_paths: interior of high degree outside U");
                Vertex nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                         : g.neighbors(cur)[0];
                p.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (pendant) {
                out.pendants.push_back(p);
                continue;
            }
            Vertex t = cur;
            if (s < t) out.u_paths.push_back(p);
            else if (s == t) {
                Path rev(p.rbegin(), p.rend());
                if (p < rev) out.u_paths.push_back(p);
            }
        }
    }
    return out;
}

// ----------------------------------------------------------- counterexample

// r internally disjoint routes standing in for one pattern path; routes run
// from eps(front) to eps(back) of the pattern path.
struct Bundle {
    Path pattern_path;
    std::vector<Path> routes;
};

struct CounterexampleInstance {
    enum class Kind { ladder, tree };
    Kind kind = Kind::ladder;
    Graph graph;
    CondensedWall wall; // vertex ids coincide with graph ids
    Graph pattern;
    VertexSet pattern_branch; // U
    std::map<Vertex, Vertex> eps;
    std::vector<Bundle> bundles;
    int size_r = 0;
    int bundle_len = 0;

    // ladder pattern
    int length = 0, cut_lo = 0, cut_hi = 0;

    // tree pattern
    TreeParts parts;
    std::array<std::vector<Path>, 4> Z; // attachments to a, b, c, d
    std::vector<Path> pendant_paths;
    std::vector<Path> special_paths; // [0]: v_top..u_top, [1]: v_bot..u_bot
    VertexSet g_prime_vertices;
    EdgeSet g_prime_edges;
};

namespace detail {

inline void copy_into(GraphBuilder& b, const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto lab = g.label(v);
        b.add_vertex(lab ? *lab : std::string{});
    }
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
}

inline Path make_route(GraphBuilder& b, Vertex from, Vertex to, int len) {
    Path p{from};
    for (int i = 1; i < len; ++i) p.push_back(b.add_vertex());
    p.push_back(to);
    for (size_t i = 0; i + 1 < p.size(); ++i) b.add_edge(p[i], p[i + 1]);
    return p;
}

inline bool same_unordered_edge(const Path& p, const Edge& e) {
    return p.size() == 2 && Edge(p.front(), p.back()) == e;
}

} // namespace detail

inline CounterexampleInstance build_ladder_counterexample(int r, int length = 71,
                                                          int cut_lo = 24,
                                                          int cut_hi = 48) {
    if (r < 2) throw std::invalid_argument("build_ladder_counterexample: need r >= 2");
    bool cuts_ok = 2 <= cut_lo && cut_lo < cut_hi && cut_hi <= length - 1 &&
                   (cut_lo - 2) >= 2 && (cut_hi - cut_lo - 1) >= 2 &&
                   (length - 1 - cut_hi) >= 2;
    if (!cuts_ok)
        throw std::invalid_argument(
            "build_ladder_counterexample: cuts must leave three segments with two "
            "interior rungs each");

    CounterexampleInstance inst;
    inst.kind = CounterexampleInstance::Kind::ladder;
    inst.size_r = r;
    inst.length = length;
    inst.cut_lo = cut_lo;
    inst.cut_hi = cut_hi;
    inst.bundle_len = 3;
    inst.wall = build_condensed_wall(r);
    LadderInstance lad = build_ladder(length);
    inst.pattern = lad.graph;
    inst.pattern_branch = lad.branch_set();

    GraphBuilder b;
    detail::copy_into(b, inst.wall.graph);

    for (Vertex p : inst.pattern_branch) {
        if (p == lad.u(cut_lo)) inst.eps[p] = inst.wall.a;
        else if (p == lad.v(cut_lo)) inst.eps[p] = inst.wall.b;
        else if (p == lad.v(cut_hi)) inst.eps[p] = inst.wall.c;
        else if (p == lad.u(cut_hi)) inst.eps[p] = inst.wall.d;
        else {
            auto lab = inst.pattern.label(p);
            inst.eps[p] = b.add_vertex("eps(" + (lab ? *lab : std::to_string(p)) + ")");
        }
    }

    auto pp = split_into_u_paths(inst.pattern, inst.pattern_branch);
    Edge rung_lo(lad.u(cut_lo), lad.v(cut_lo)), rung_hi(lad.u(cut_hi), lad.v(cut_hi));
    for (const Path& up : pp.u_paths) {
        if (detail::same_unordered_edge(up, rung_lo) ||
            detail::same_unordered_edge(up, rung_hi))
            continue;
        Bundle bd;
        bd.pattern_path = up;
        for (int k = 0; k < r; ++k)
            bd.routes.push_back(detail::make_route(b, inst.eps.at(up.front()),
                                                   inst.eps.at(up.back()),
                                                   inst.bundle_len));
        inst.bundles.push_back(std::move(bd));
    }
    inst.graph = b.build();
    return inst;
}

inline CounterexampleInstance build_tree_counterexample(const TreeParts& parts, int r,
                                                        int bundle_len = 0) {
    if (r < 5) throw std::invalid_argument("build_tree_counterexample: need r >= 5");
    if (bundle_len == 0) bundle_len = parts.tree.vertex_count();

    CounterexampleInstance inst;
    inst.kind = CounterexampleInstance::Kind::tree;
    inst.size_r = r;
    inst.bundle_len = bundle_len;
    inst.parts = parts;
    inst.pattern = parts.tree;
    inst.pattern_branch = branch_vertices(parts.tree);
    inst.wall = build_condensed_wall(r);

    auto pp = split_into_u_paths(inst.pattern, inst.pattern_branch);
    inst.pendant_paths = pp.pendants;
    Path top = parts.rooted.up_path(parts.u_top, parts.v_top);
    std::reverse(top.begin(), top.end()); // v_top .. u_top
    Path bot = parts.rooted.up_path(parts.u_bot, parts.v_bot);
    std::reverse(bot.begin(), bot.end()); // v_bot .. u_bot
    inst.special_paths = {top, bot};

    // route feasibility: a route must be longer than any pattern path it
    // carries, with room for a pendant segment on top
    size_t need = 2;
    for (const Path& up : pp.u_paths) need = std::max(need, up.size() - 1);
    for (const Path& p : pp.pendants) need = std::max(need, p.size());
    if (static_cast<size_t>(bundle_len) < need)
        throw std::invalid_argument("build_tree_counterexample: route length too small");

    GraphBuilder b;
    detail::copy_into(b, inst.wall.graph);
    for (Vertex p : inst.pattern_branch) {
        auto lab = inst.pattern.label(p);
        inst.eps[p] = b.add_vertex("eps(" + (lab ? *lab : std::to_string(p)) + ")");
    }

    auto is_special = [&](const Path& up) {
        for (const Path& sp : inst.special_paths) {
            if (up == sp) return true;
            Path rev(sp.rbegin(), sp.rend());
            if (up == rev) return true;
        }
        return false;
    };
    for (const Path& up : pp.u_paths) {
        if (is_special(up)) continue;
        Bundle bd;
        bd.pattern_path = up;
        for (int k = 0; k < r; ++k)
            bd.routes.push_back(detail::make_route(b, inst.eps.at(up.front()),
                                                   inst.eps.at(up.back()), bundle_len));
        inst.bundles.push_back(std::move(bd));
    }

    // Z bundles: eps-vertex first, wall terminal last
    std::array<std::pair<Vertex, Vertex>, 4> zspec = {
        std::pair<Vertex, Vertex>{parts.v_top, inst.wall.a},
        {parts.u_top, inst.wall.b},
        {parts.v_bot, inst.wall.c},
        {parts.u_bot, inst.wall.d}};
    for (int zi = 0; zi < 4; ++zi)
        for (int k = 0; k < r; ++k)
            inst.Z[zi].push_back(detail::make_route(b, inst.eps.at(zspec[zi].first),
                                                    zspec[zi].second, bundle_len));
    inst.graph = b.build();

    // G': wall, the bundles lying inside parts C and D, and Z_b, Z_c, Z_d
    auto add_path_to_gprime = [&](const Path& p) {
        for (size_t i = 0; i < p.size(); ++i) {
            inst.g_prime_vertices.insert(p[i]);
            if (i + 1 < p.size()) inst.g_prime_edges.insert(Edge(p[i], p[i + 1]));
        }
    };
    for (Vertex v = 0; v < inst.wall.graph.vertex_count(); ++v)
        inst.g_prime_vertices.insert(v);
    for (const Edge& e : inst.wall.graph.edges()) inst.g_prime_edges.insert(e);
    VertexSet inC(parts.part_C.begin(), parts.part_C.end());
    VertexSet inD(parts.part_D.begin(), parts.part_D.end());
    auto inside = [&](const Path& p, const VertexSet& s) {
        for (Vertex v : p)
            if (!s.count(v)) return false;
        return true;
    };
    for (const Bundle& bd : inst.bundles)
        if (inside(bd.pattern_path, inC) || inside(bd.pattern_path, inD))
            for (const Path& rt : bd.routes) add_path_to_gprime(rt);
    for (int zi = 1; zi < 4; ++zi)
        for (const Path& rt : inst.Z[zi]) add_path_to_gprime(rt);
    return inst;
}

// ----------------------------------------------------- construction checks

// Structural properties of a built instance; returns violations (empty = ok).
// Tree instances: the minimal top-level image meets G' only in eps(u_top);
// the level-w weight of G' equals omega_min; every branch vertex of G lies
// in eps(U) or in the wall. Ladder instances: removing the four terminals
// splits G into the wall remainder plus three pattern segments.
inline std::vector<std::string> validate_counterexample(const CounterexampleInstance& inst) {
    std::vector<std::string> bad;
    const Graph& G = inst.graph;

    // branch vertices confined to eps(U) + wall
    {
        std::vector<char> ok(G.vertex_count(), 0);
        for (Vertex v = 0; v < inst.wall.graph.vertex_count(); ++v) ok[v] = 1;
        for (const auto& [p, x] : inst.eps) ok[x] = 1;
        for (Vertex v = 0; v < G.vertex_count(); ++v)
            if (G.degree(v) >= 3 && !ok[v]) {
                bad.push_back("branch vertex outside eps(U) and the wall");
                break;
            }
    }

    if (inst.kind == CounterexampleInstance::Kind::ladder) {
        const auto& w = inst.wall;
        auto comps = components(G, VertexSet{w.a, w.b, w.c, w.d});
        if (comps.size() != 4) {
            bad.push_back("terminal removal yields " + std::to_string(comps.size()) +
                          " components instead of 4");
            return bad;
        }
        LadderInstance lad = build_ladder(inst.length);
        Vertex probes[3] = {inst.eps.at(lad.u(2)), inst.eps.at(lad.u(inst.cut_lo + 1)),
                            inst.eps.at(lad.u(inst.length - 1))};
        std::set<size_t> seen;
        for (Vertex pr : probes)
            for (size_t i = 0; i < comps.size(); ++i)
                if (std::binary_search(comps[i].begin(), comps[i].end(), pr)) seen.insert(i);
        if (seen.size() != 3) bad.push_back("pattern segments not in three distinct components");
        for (size_t i = 0; i < comps.size(); ++i)
            if (std::binary_search(comps[i].begin(), comps[i].end(), w.u(1, 1)) && seen.count(i))
                bad.push_back("wall remainder merged with a pattern segment");
        return bad;
    }

    const TreeParts& P = inst.parts;
    LevelTable L = compute_levels(P.tree);
    RootedTree rt = root_tree(P.tree, P.root);

    // minimal vertices of the top level
    std::vector<char> in(P.tree.vertex_count(), 0);
    for (Vertex v = 0; v < P.tree.vertex_count(); ++v) in[v] = L.lambda[v] >= P.w + 5;
    auto mins = detail::minimal_vertices(rt, in);
    for (Vertex s : mins) {
        bool inside = inst.g_prime_vertices.count(inst.eps.at(s)) > 0;
        if (inside != (s == P.u_top)) {
            bad.push_back("G' meets the minimal top-level image at the wrong spot");
            break;
        }
    }

    long cnt = 0;
    for (Vertex v = 0; v < P.tree.vertex_count(); ++v)
        if (L.lambda[v] >= P.w && inst.pattern_branch.count(v) &&
            inst.g_prime_vertices.count(inst.eps.at(v)))
            ++cnt;
    if (cnt != P.omega_min)
        bad.push_back("level-w weight of G' is " + std::to_string(cnt) + ", expected " +
                      std::to_string(P.omega_min));
    return bad;
}

// Local structure around eps(v) for a branch vertex v off the main path of a
// tree instance: G - eps(v) splits into exactly as many components as T - v
// has branch-vertex-carrying components, the images of those components land
// in distinct parts, and each part hangs on a single articulation vertex.
inline std::vector<std::string> validate_local_structure(const CounterexampleInstance& inst,
                                                         Vertex v) {
    if (inst.kind != CounterexampleInstance::Kind::tree)
        throw std::invalid_argument("validate_local_structure: tree instances only");
    if (!inst.pattern_branch.count(v))
        throw std::invalid_argument("validate_local_structure: not a branch vertex");
    if (std::find(inst.parts.main_path.begin(), inst.parts.main_path.end(), v) !=
        inst.parts.main_path.end())
        throw std::invalid_argument("validate_local_structure: vertex lies on the main path");
    std::vector<std::string> bad;
    const Graph& G = inst.graph;
    Vertex ev = inst.eps.at(v);

    auto tcomps = components(inst.pattern, VertexSet{v});
    std::vector<std::vector<Vertex>> tBranchComps;
    for (auto& comp : tcomps) {
        bool hasU = false;
        for (Vertex x : comp)
            if (inst.pattern_branch.count(x)) hasU = true;
        if (hasU) tBranchComps.push_back(comp);
    }
    auto gcomps = components(G, VertexSet{ev});
    if (gcomps.size() != tBranchComps.size()) {
        bad.push_back("component count mismatch: " + std::to_string(gcomps.size()) + " vs " +
                      std::to_string(tBranchComps.size()));
        return bad;
    }

    // (ii) images of distinct T-components land in distinct G-components
    std::set<size_t> used;
    for (auto& comp : tBranchComps) {
        std::set<size_t> hit;
        for (Vertex x : comp) {
            if (!inst.pattern_branch.count(x)) continue;
            Vertex gx = inst.eps.at(x);
            for (size_t i = 0; i < gcomps.size(); ++i)
                if (std::binary_search(gcomps[i].begin(), gcomps[i].end(), gx)) hit.insert(i);
        }
        if (hit.size() != 1) {
            bad.push_back("image of a branch component is split across parts");
            return bad;
        }
        used.insert(*hit.begin());
    }
    if (used.size() != tBranchComps.size())
        bad.push_back("two branch components share a part");

    // (iii) one articulation vertex shields all branch vertices of each part
    for (const auto& comp : gcomps) {
        std::vector<Vertex> branch;
        for (Vertex x : comp)
            if (G.degree(x) >= 3) branch.push_back(x);
        if (branch.empty()) continue;
        std::vector<char> inside(static_cast<size_t>(G.vertex_count()), 0);
        for (Vertex x : comp) inside[static_cast<size_t>(x)] = 1;
        inside[static_cast<size_t>(ev)] = 1;
        bool found = false;
        for (Vertex x : branch) { // shield is an eps-image or wall hub
            // walk from ev inside comp + ev, avoiding x; a reachable branch
            // vertex other than x means x does not shield
            std::vector<char> seen(static_cast<size_t>(G.vertex_count()), 0);
            seen[static_cast<size_t>(ev)] = 1;
            std::vector<Vertex> q{ev};
            bool leak = false;
            while (!q.empty() && !leak) {
                Vertex cur = q.back();
                q.pop_back();
                for (Vertex nb : G.neighbors(cur)) {
                    if (nb == x || !inside[static_cast<size_t>(nb)] ||
                        seen[static_cast<size_t>(nb)])
                        continue;
                    if (G.degree(nb) >= 3) {
                        leak = true;
                        break;
                    }
                    seen[static_cast<size_t>(nb)] = 1;
                    q.push_back(nb);
                }
            }
            if (!leak) {
                found = true;
                break;
            }
        }
        if (!found) {
            bad.push_back("a component has no shielding articulation vertex");
            break;
        }
    }
    return bad;
}

// ---------------------------------------------------- reference subdivision

namespace detail {

inline bool path_untouched(const Path& p, const EdgeSet& deleted) {
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (deleted.count(Edge(p[i], p[i + 1]))) return false;
    return true;
}

// Map a pattern path onto a graph path: interiors go to the first graph
// vertices, the final pattern edge takes the remaining stretch.
inline void assign_chain(SubdivisionModel& model, const Path& ppath, const Path& gpath) {
    size_t k = ppath.size() - 2;
    if (gpath.size() < ppath.size())
        throw std::runtime_error("reference subdivision: carrier path too short");
    for (size_t j = 1; j <= k; ++j) model.branch_map[ppath[j]] = gpath[j];
    for (size_t j = 0; j + 1 < ppath.size(); ++j) {
        Path seg;
        if (j < k) seg = {gpath[j], gpath[j + 1]};
        else seg.assign(gpath.begin() + static_cast<long>(k), gpath.end());
        if (ppath[j] > ppath[j + 1]) std::reverse(seg.begin(), seg.end());
        model.edge_paths[Edge(ppath[j], ppath[j + 1])] = seg;
    }
}

} // namespace detail

// Embedding of the pattern into the instance that avoids the given deleted
// edges; valid whenever the deletion budget (r-2 for ladder instances, r-3
// for tree instances) is respected.
inline SubdivisionModel reference_subdivision(const CounterexampleInstance& inst,
                                              const EdgeSet& deleted) {
    int budget = inst.kind == CounterexampleInstance::Kind::ladder ? inst.size_r - 2
                                                                  : inst.size_r - 3;
    if (static_cast<int>(deleted.size()) > budget)
        throw std::invalid_argument("reference_subdivision: too many deleted edges");
    for (const Edge& e : deleted) inst.graph.check_edge(e);

    const CondensedWall& w = inst.wall;
    int r = inst.size_r;

    // wall linkage: an untouched layer group carries the a--b path
    int layer = -1;
    for (int j = 1; j <= r && layer < 0; ++j) {
        bool clean = true;
        for (const Edge& e : w.layer_group(j))
            if (deleted.count(e)) clean = false;
        if (clean) layer = j;
    }
    if (layer < 0) throw std::runtime_error("reference_subdivision: no free wall layer");
    Path ab{w.a};
    for (Vertex x : w.row_path(layer)) ab.push_back(x);
    ab.push_back(w.b);

    Path cd{w.z[0]};
    for (int i = 1; i <= r; ++i) {
        if (!deleted.count(Edge(w.z[i - 1], w.z[i]))) {
            cd.push_back(w.z[i]);
            continue;
        }
        int pick = -1;
        for (int t = 1; t <= r && pick < 0; ++t) {
            if (i == layer) break;
            if (!deleted.count(Edge(w.z[i - 1], w.u(i, 2 * t))) &&
                !deleted.count(Edge(w.u(i, 2 * t - 1), w.u(i, 2 * t))) &&
                !deleted.count(Edge(w.z[i], w.u(i, 2 * t - 1))))
                pick = t;
        }
        if (pick < 0) throw std::runtime_error("reference_subdivision: no spine detour");
        cd.push_back(w.u(i, 2 * pick));
        cd.push_back(w.u(i, 2 * pick - 1));
        cd.push_back(w.z[i]);
    }

    SubdivisionModel model;
    for (const auto& [p, x] : inst.eps) model.branch_map[p] = x;

    // per-bundle route choice
    std::vector<std::vector<char>> used(inst.bundles.size());
    for (size_t bi = 0; bi < inst.bundles.size(); ++bi) {
        const Bundle& bd = inst.bundles[bi];
        used[bi].assign(bd.routes.size(), 0);
        int pick = -1;
        for (size_t k = 0; k < bd.routes.size() && pick < 0; ++k)
            if (detail::path_untouched(bd.routes[k], deleted)) pick = static_cast<int>(k);
        if (pick < 0) throw std::runtime_error("reference_subdivision: bundle exhausted");
        used[bi][static_cast<size_t>(pick)] = 1;
        detail::assign_chain(model, bd.pattern_path, bd.routes[static_cast<size_t>(pick)]);
    }

    if (inst.kind == CounterexampleInstance::Kind::ladder) {
        // pattern ids follow the ladder layout: u_i = 2(i-1), v_i = 2(i-1)+1
        auto lu = [](int i) { return 2 * (i - 1); };
        auto lv = [](int i) { return 2 * (i - 1) + 1; };
        // cut rungs ride on the wall linkage
        detail::assign_chain(model, Path{lu(inst.cut_lo), lv(inst.cut_lo)}, ab);
        Path dc(cd.rbegin(), cd.rend());
        detail::assign_chain(model, Path{lu(inst.cut_hi), lv(inst.cut_hi)}, dc);
        return model;
    }

    // tree instance: special paths travel through Z-bundles and the wall
    std::array<std::vector<char>, 4> zused;
    auto pick_z = [&](int zi) -> const Path& {
        zused[zi].assign(inst.Z[zi].size(), 0);
        for (size_t k = 0; k < inst.Z[zi].size(); ++k)
            if (detail::path_untouched(inst.Z[zi][k], deleted)) {
                zused[zi][k] = 1;
                return inst.Z[zi][k];
            }
        throw std::runtime_error("reference_subdivision: attachment bundle exhausted");
    };
    auto concat = [](std::initializer_list<Path> parts) {
        Path out;
        for (const Path& p : parts) {
            size_t skip = out.empty() ? 0 : 1;
            out.insert(out.end(), p.begin() + static_cast<long>(skip), p.end());
        }
        return out;
    };
    {
        const Path& za = pick_z(0); // eps(v_top) .. a
        Path zb = pick_z(1);        // eps(u_top) .. b
        std::reverse(zb.begin(), zb.end());
        detail::assign_chain(model, inst.special_paths[0], concat({za, ab, zb}));
        const Path& zc = pick_z(2); // eps(v_bot) .. c
        Path zd = pick_z(3);        // eps(u_bot) .. d
        std::reverse(zd.begin(), zd.end());
        detail::assign_chain(model, inst.special_paths[1], concat({zc, cd, zd}));
    }

    // pendant paths take initial segments of spare routes at their anchor
    std::array<Vertex, 4> zanchor = {inst.eps.at(inst.parts.v_top), inst.eps.at(inst.parts.u_top),
                                     inst.eps.at(inst.parts.v_bot), inst.eps.at(inst.parts.u_bot)};
    for (const Path& pp : inst.pendant_paths) {
        Vertex anchor = inst.eps.at(pp.front());
        size_t seg = pp.size() - 1; // edges needed
        Path carrier;
        for (size_t bi = 0; bi < inst.bundles.size() && carrier.empty(); ++bi) {
            const Bundle& bd = inst.bundles[bi];
            for (size_t k = 0; k < bd.routes.size() && carrier.empty(); ++k) {
                if (used[bi][k]) continue;
                Path rt = bd.routes[k];
                if (rt.back() == anchor) std::reverse(rt.begin(), rt.end());
                if (rt.front() != anchor) break;
                Path cand(rt.begin(), rt.begin() + static_cast<long>(seg + 1));
                if (!detail::path_untouched(cand, deleted)) continue;
                carrier = cand;
                used[bi][k] = 1;
            }
        }
        for (int zi = 0; zi < 4 && carrier.empty(); ++zi) {
            if (zanchor[static_cast<size_t>(zi)] != anchor) continue;
            for (size_t k = 0; k < inst.Z[zi].size() && carrier.empty(); ++k) {
                if (zused[zi][k]) continue;
                Path cand(inst.Z[zi][k].begin(),
                          inst.Z[zi][k].begin() + static_cast<long>(seg + 1));
                if (!detail::path_untouched(cand, deleted)) continue;
                carrier = cand;
                zused[zi][k] = 1;
            }
        }
        if (carrier.empty())
            throw std::runtime_error("reference_subdivision: no room for a pendant path");
        model.branch_map[pp.back()] = carrier.back();
        detail::assign_chain(model, pp, carrier);
    }
    return model;
}

} // namespace epobs
