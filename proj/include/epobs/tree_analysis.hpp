#pragma once

// Tree machinery: level sets L_h with per-vertex level value lambda, subtree
// weights, exact tree pathwidth, largest embedded complete binary tree (with
// witness), and the structured decomposition of a tree into parts A, C, D
// around a main path, together with an independent validator.

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "epobs/certificates.hpp"
#include "epobs/graph.hpp"

namespace epobs {

// ---------------------------------------------------------------- rooted tree

struct RootedTree {
    Graph graph;
    Vertex root = 0;
    std::vector<Vertex> parent;   // -1 at the root
    std::vector<std::vector<Vertex>> children;
    std::vector<int> tin, tout;   // preorder interval of the subtree, tout exclusive
    std::vector<Vertex> pre;      // vertices in preorder

    // v is an ancestor of u or u itself (u <=_T v in the tree order).
    bool below_eq(Vertex u, Vertex v) const { return tin[v] <= tin[u] && tin[u] < tout[v]; }
    bool strictly_below(Vertex u, Vertex v) const { return u != v && below_eq(u, v); }

    std::vector<Vertex> subtree(Vertex u) const {
        return {pre.begin() + tin[u], pre.begin() + tout[u]};
    }

    // Path low, parent(low), ..., high; high must be an ancestor of low.
    Path up_path(Vertex low, Vertex high) const {
        if (!below_eq(low, high)) throw std::invalid_argument("up_path: not an ancestor");
        Path p;
        for (Vertex v = low;; v = parent[v]) {
            p.push_back(v);
            if (v == high) break;
        }
        return p;
    }
};

inline RootedTree root_tree(const Graph& g, Vertex root) {
    if (!is_tree(g)) throw std::invalid_argument("root_tree: input is not a tree");
    g.check_vertex(root);
    int n = g.vertex_count();
    RootedTree rt;
    rt.graph = g;
    rt.root = root;
    rt.parent.assign(n, -1);
    rt.children.assign(n, {});
    rt.tin.assign(n, 0);
    rt.tout.assign(n, 0);
    rt.pre.reserve(n);
    std::vector<Vertex> stack{root};
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        rt.tin[v] = static_cast<int>(rt.pre.size());
        rt.pre.push_back(v);
        // reverse order so smaller-id children are visited first
        const auto& nb = g.neighbors(v);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
            if (seen[*it]) continue;
            seen[*it] = 1;
            rt.parent[*it] = v;
            rt.children[v].push_back(*it);
            stack.push_back(*it);
        }
        std::sort(rt.children[v].begin(), rt.children[v].end());
    }
    // DFS preorder from an explicit stack is not contiguous per subtree, so
    // recompute properly: iterative DFS that emits tin on push and tout on pop.
    rt.pre.clear();
    std::vector<std::pair<Vertex, size_t>> st2{{root, 0}};
    while (!st2.empty()) {
        auto& [v, idx] = st2.back();
        if (idx == 0) {
            rt.tin[v] = static_cast<int>(rt.pre.size());
            rt.pre.push_back(v);
        }
        if (idx < rt.children[v].size()) {
            Vertex c = rt.children[v][idx++];
            st2.push_back({c, 0});
        } else {
            rt.tout[v] = static_cast<int>(rt.pre.size());
            st2.pop_back();
        }
    }
    return rt;
}

// ------------------------------------------------------------------- levels

// lambda[v] >= h iff v has three internally disjoint "linked" height-h
// branches; lambda[v] == -1 when v has degree < 3 (level undefined).
// branch[{v,u}] is the largest h such that the component of T - v containing
// u holds a complete-binary-tree root of height h reachable from v (a
// v-linked B_h-tree inside that branch).
struct LevelTable {
    int h_max = std::numeric_limits<int>::max();
    std::vector<int> lambda;
    std::map<std::pair<Vertex, Vertex>, int> branch;

    bool in_level(Vertex v, int h) const { return lambda[v] >= h; }
    int branch_value(Vertex v, Vertex u) const { return branch.at({v, u}); }
};

namespace detail {

inline int second_max(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v.size() >= 2 ? v[1] : -1;
}

inline int third_max(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v.size() >= 3 ? v[2] : -1;
}

inline void erase_one(std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    v.erase(it);
}

// preorder + parents for a tree rooted at 0 (levels are root-independent)
struct DfsFrame {
    std::vector<Vertex> order;
    std::vector<Vertex> par;
};

inline DfsFrame dfs_order(const Graph& t) {
    int n = t.vertex_count();
    DfsFrame f;
    f.par.assign(n, -1);
    f.order.reserve(n);
    std::vector<Vertex> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        f.order.push_back(v);
        for (Vertex u : t.neighbors(v)) {
            if (seen[u]) continue;
            seen[u] = 1;
            f.par[u] = v;
            stack.push_back(u);
        }
    }
    return f;
}

} // namespace detail

inline LevelTable compute_levels(const Graph& t,
                                 int h_max = std::numeric_limits<int>::max()) {
    if (!is_tree(t)) throw std::invalid_argument("compute_levels: input is not a tree");
    int n = t.vertex_count();
    LevelTable L;
    L.h_max = h_max;
    L.lambda.assign(n, -1);
    if (n == 0) return L;

    auto f = detail::dfs_order(t);

    // downward pass: D[u] = branch value of (parent(u) -> u)
    std::vector<int> D(n, 0);
    for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
        Vertex u = *it;
        std::vector<int> vals;
        for (Vertex c : t.neighbors(u))
            if (c != f.par[u]) vals.push_back(D[c]);
        int best = 0;
        for (int x : vals) best = std::max(best, x);
        if (vals.size() >= 2) best = std::max(best, 1 + detail::second_max(vals));
        D[u] = best;
    }

    // upward pass: Up[c] = branch value of (c -> parent(c))
    std::vector<int> Up(n, -1);
    for (Vertex u : f.order) {
        std::vector<int> B;
        for (Vertex c : t.neighbors(u))
            if (c != f.par[u]) B.push_back(D[c]);
        if (f.par[u] >= 0) B.push_back(Up[u]);
        for (Vertex c : t.neighbors(u)) {
            if (c == f.par[u]) continue;
            std::vector<int> others = B;
            detail::erase_one(others, D[c]);
            int m = 0;
            for (int x : others) m = std::max(m, x);
            if (others.size() >= 2) m = std::max(m, 1 + detail::second_max(others));
            Up[c] = m;
        }
    }

    for (Vertex u = 0; u < n; ++u) {
        std::vector<int> vals;
        for (Vertex x : t.neighbors(u)) {
            int m = (x == f.par[u]) ? Up[u] : D[x];
            L.branch[{u, x}] = m;
            vals.push_back(m);
        }
        if (t.degree(u) >= 3) L.lambda[u] = detail::third_max(vals);
    }
    return L;
}

inline LevelTable compute_levels(const RootedTree& rt,
                                 int h_max = std::numeric_limits<int>::max()) {
    return compute_levels(rt.graph, h_max);
}

// ------------------------------------------------------------------- weights

// Weight of a subtree (given by its vertex set): number of vertices whose
// level value reaches w.
template <class Range>
long compute_weight(const LevelTable& levels, const Range& vertices, int w) {
    long cnt = 0;
    for (Vertex v : vertices)
        if (levels.lambda[v] >= w) ++cnt;
    return cnt;
}

// Signature of a degree-3 vertex u in a rooted tree: the weights of the two
// child subtrees, heavier first.
inline std::pair<long, long> compute_signature(const RootedTree& rt,
                                               const LevelTable& levels, Vertex u,
                                               int w) {
    rt.graph.check_vertex(u);
    if (rt.children[u].size() != 2)
        throw std::invalid_argument("compute_signature: vertex does not have two children");
    long a = compute_weight(levels, rt.subtree(rt.children[u][0]), w);
    long b = compute_weight(levels, rt.subtree(rt.children[u][1]), w);
    if (a < b) std::swap(a, b);
    return {a, b};
}

// ----------------------------------------------------------- tree pathwidth

namespace detail {

// Decision procedure for tree pathwidth over connected induced pieces,
// based on the branch characterization of vertex separation: for k >= 1,
// pw >= k+1 iff some vertex leaves at least three components of pathwidth
// >= k. The smallest tree of pathwidth >= k has m(k) = 3 m(k-1) + 1
// vertices (m(1) = 2), which prunes the recursion hard.
struct PiecePw {
    const Graph& t;

    static size_t min_size(int k) {
        size_t m = 2; // an edge
        for (int i = 2; i <= k; ++i) {
            if (m > (size_t(1) << 40)) return m;
            m = 3 * m + 1;
        }
        return m;
    }

    // does the connected piece have pathwidth >= k?
    bool ge(const std::vector<Vertex>& piece, int k) const {
        if (k <= 0) return !piece.empty();
        if (k == 1) return piece.size() >= 2;
        if (piece.size() < min_size(k)) return false;
        std::vector<char> in(static_cast<size_t>(t.vertex_count()), 0);
        for (Vertex v : piece) in[static_cast<size_t>(v)] = 1;
        size_t need = min_size(k - 1);
        for (Vertex w : piece) {
            int ideg = 0;
            for (Vertex x : t.neighbors(w))
                if (in[static_cast<size_t>(x)]) ++ideg;
            if (ideg < 3) continue;
            // components of the piece minus w, large ones only
            std::vector<char> seen(static_cast<size_t>(t.vertex_count()), 0);
            seen[static_cast<size_t>(w)] = 1;
            std::vector<std::vector<Vertex>> comps;
            for (Vertex s : piece) {
                if (seen[static_cast<size_t>(s)]) continue;
                std::vector<Vertex> comp{s};
                seen[static_cast<size_t>(s)] = 1;
                for (size_t i = 0; i < comp.size(); ++i)
                    for (Vertex x : t.neighbors(comp[i])) {
                        if (!in[static_cast<size_t>(x)] || seen[static_cast<size_t>(x)]) continue;
                        seen[static_cast<size_t>(x)] = 1;
                        comp.push_back(x);
                    }
                if (comp.size() >= need) comps.push_back(std::move(comp));
            }
            if (comps.size() < 3) continue;
            int hits = 0;
            for (size_t i = 0; i < comps.size() && hits < 3; ++i) {
                if (ge(comps[i], k - 1)) ++hits;
                if (hits + static_cast<int>(comps.size() - i - 1) < 3) break;
            }
            if (hits >= 3) return true;
        }
        return false;
    }
};

} // namespace detail

// Exact pathwidth of a tree via the branch characterization: for k >= 1,
// pw(T) >= k+1 iff some vertex leaves three branches of pathwidth >= k.
inline int tree_pathwidth(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_pathwidth: input is not a tree");
    int n = t.vertex_count();
    if (n <= 1) return 0;
    detail::PiecePw solver{t};
    std::vector<Vertex> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    int k = 1;
    while (solver.ge(all, k + 1)) ++k;
    return k;
}

// ---------------------------------------------------------------- B_h search

// Largest h such that the tree contains a subdivision of the complete binary
// tree of height h whose root keeps two disjoint height-(h-1) branches.
inline int max_Bh(const Graph& t) {
    if (t.vertex_count() < 2)
        throw std::invalid_argument("max_Bh: tree must have at least two vertices");
    LevelTable L = compute_levels(t);
    int best = 0;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        std::vector<int> vals;
        for (Vertex x : t.neighbors(v)) vals.push_back(L.branch_value(v, x));
        if (vals.size() >= 2) best = std::max(best, 1 + detail::second_max(vals));
    }
    return best;
}

namespace detail {

inline int rooted_excl(const Graph& t, const LevelTable& L, Vertex v, Vertex from) {
    std::vector<int> vals;
    for (Vertex x : t.neighbors(v))
        if (x != from) vals.push_back(L.branch_value(v, x));
    return vals.size() >= 2 ? 1 + second_max(vals) : 0;
}

inline void embed_rooted(const Graph& t, const LevelTable& L, Vertex rho, Vertex from,
                         int h, Vertex pid, SubdivisionModel& model) {
    model.branch_map[pid] = rho;
    if (h == 0) return;
    // two best branches away from `from`
    std::vector<std::pair<int, Vertex>> dirs;
    for (Vertex x : t.neighbors(rho))
        if (x != from) dirs.push_back({-L.branch_value(rho, x), x});
    std::sort(dirs.begin(), dirs.end());
    for (int i = 0; i < 2; ++i) {
        Vertex x = dirs[i].second;
        Vertex cpid = 2 * pid + 1 + i;
        Path p{rho};
        Vertex prev = rho, cur = x;
        while (rooted_excl(t, L, cur, prev) < h - 1) {
            Vertex nxt = -1;
            for (Vertex y : t.neighbors(cur))
                if (y != prev && L.branch_value(cur, y) >= h - 1) {
                    nxt = y;
                    break;
                }
            p.push_back(cur);
            prev = cur;
            cur = nxt;
        }
        p.push_back(cur);
        model.edge_paths[Edge(pid, cpid)] = p;
        embed_rooted(t, L, cur, prev, h - 1, cpid, model);
    }
}

} // namespace detail

// Witness for max_Bh: embedding of the complete binary tree of height
// max_Bh(t) into t (pattern vertices in heap order, root 0).
inline SubdivisionModel max_Bh_witness(const Graph& t) {
    int h = max_Bh(t);
    LevelTable L = compute_levels(t);
    Vertex best = -1;
    for (Vertex v = 0; v < t.vertex_count() && best < 0; ++v) {
        std::vector<int> vals;
        for (Vertex x : t.neighbors(v)) vals.push_back(L.branch_value(v, x));
        if (vals.size() >= 2 && 1 + detail::second_max(vals) >= h) best = v;
        if (h == 0) best = v;
    }
    SubdivisionModel model;
    detail::embed_rooted(t, L, best, -1, h, 0, model);
    return model;
}

// ------------------------------------------------------------ decomposition

// Parts of a tree around its main path. Level profile: weights are counted
// at level w, the u-chain sits at levels w+2..w+5, the root is picked from
// level w+7.
struct TreeParts {
    Graph tree;
    int w = 10;
    Vertex root = -1;
    Vertex u_top = -1;    // level w+5
    Vertex u_mid_hi = -1; // level w+4
    Vertex u_mid_lo = -1; // level w+3
    Vertex u_bot = -1;    // level w+2
    Vertex v_top = -1;    // nearest branch vertex strictly above u_top
    Vertex v_bot = -1;    // nearest branch vertex strictly above u_bot
    Path main_path;       // u_top .. v_bot
    std::vector<Vertex> part_A, part_C, part_D;
    long omega_min = 0;
    LevelTable levels;
    RootedTree rooted;
};

namespace detail {

// subtree counts of an indicator over a rooted tree
inline std::vector<int> subtree_counts(const RootedTree& rt, const std::vector<char>& in) {
    int n = rt.graph.vertex_count();
    std::vector<int> cnt(n, 0);
    for (auto it = rt.pre.rbegin(); it != rt.pre.rend(); ++it) {
        Vertex v = *it;
        cnt[v] = in[v] ? 1 : 0;
        for (Vertex c : rt.children[v]) cnt[v] += cnt[c];
    }
    return cnt;
}

// vertices of S with no other S-vertex strictly below them
inline std::vector<Vertex> minimal_vertices(const RootedTree& rt, const std::vector<char>& in) {
    auto cnt = subtree_counts(rt, in);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < rt.graph.vertex_count(); ++v)
        if (in[v] && cnt[v] == 1) out.push_back(v);
    return out;
}

inline Vertex nearest_branch_ancestor(const RootedTree& rt, Vertex v) {
    for (Vertex a = rt.parent[v]; a >= 0; a = rt.parent[a])
        if (rt.graph.degree(a) >= 3) return a;
    return -1;
}

} // namespace detail

inline TreeParts decompose_tree(const Graph& t, int w) {
    if (w < 0) throw std::invalid_argument("decompose_tree: negative level profile");
    TreeParts p;
    p.tree = t;
    p.w = w;
    p.levels = compute_levels(t);
    int n = t.vertex_count();

    for (Vertex v = 0; v < n && p.root < 0; ++v)
        if (p.levels.lambda[v] >= w + 7) p.root = v;
    if (p.root < 0)
        throw std::invalid_argument("decompose_tree: no vertex reaches the root level");
    p.rooted = root_tree(t, p.root);
    const RootedTree& rt = p.rooted;

    std::vector<char> weight_in(n, 0);
    for (Vertex v = 0; v < n; ++v) weight_in[v] = p.levels.lambda[v] >= w;
    auto wcnt = detail::subtree_counts(rt, weight_in);

    // u_top: lightest-subtree minimal vertex of level w+5
    std::vector<char> in(n, 0);
    for (Vertex v = 0; v < n; ++v) in[v] = p.levels.lambda[v] >= w + 5;
    auto mins = detail::minimal_vertices(rt, in);
    if (mins.empty())
        throw std::runtime_error("decompose_tree: level w+5 is empty");
    for (Vertex v : mins)
        if (p.u_top < 0 || wcnt[v] < wcnt[p.u_top]) p.u_top = v;
    p.omega_min = wcnt[p.u_top];
    if (p.u_top == p.root)
        throw std::runtime_error("decompose_tree: minimal candidate coincides with the root");
    if (rt.children[p.u_top].size() != 2)
        throw std::runtime_error("decompose_tree: candidate does not have two child subtrees");

    // heavier child subtree is T1; u_mid_hi is picked inside the lighter T2
    Vertex c0 = rt.children[p.u_top][0], c1 = rt.children[p.u_top][1];
    Vertex t2root = (wcnt[c0] >= wcnt[c1]) ? c1 : c0;

    auto pick_min_in_subtree = [&](Vertex sub, int level) -> Vertex {
        std::vector<char> s(n, 0);
        for (Vertex v : rt.subtree(sub)) s[v] = p.levels.lambda[v] >= level;
        auto ms = detail::minimal_vertices(rt, s);
        if (ms.empty())
            throw std::runtime_error("decompose_tree: a u-level has no candidate");
        return *std::min_element(ms.begin(), ms.end());
    };
    p.u_mid_hi = pick_min_in_subtree(t2root, w + 4);
    p.u_mid_lo = pick_min_in_subtree(p.u_mid_hi, w + 3);
    p.u_bot = pick_min_in_subtree(p.u_mid_lo, w + 2);

    p.v_top = detail::nearest_branch_ancestor(rt, p.u_top);
    p.v_bot = detail::nearest_branch_ancestor(rt, p.u_bot);
    if (p.v_top < 0 || p.v_bot < 0)
        throw std::runtime_error("decompose_tree: missing branch vertex above the chain");

    Path up = rt.up_path(p.v_bot, p.u_top);
    p.main_path.assign(up.rbegin(), up.rend());

    // parts
    std::vector<char> inD(n, 0), inTop(n, 0), cut(n, 0);
    for (Vertex v : rt.subtree(p.u_bot)) inD[v] = 1;
    for (Vertex v : rt.subtree(p.u_top)) inTop[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (inD[v]) p.part_D.push_back(v);
    Path botSeg = rt.up_path(p.u_bot, p.v_bot); // u_bot .. v_bot
    for (Vertex v : botSeg)
        if (v != p.v_bot) cut[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (inTop[v] && !inD[v] && !cut[v]) p.part_C.push_back(v);
    std::fill(cut.begin(), cut.end(), 0);
    Path topSeg = rt.up_path(p.u_top, p.v_top);
    for (Vertex v : topSeg)
        if (v != p.v_top) cut[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (!inTop[v] && !cut[v]) p.part_A.push_back(v);
    return p;
}

// Independent re-check of the decomposition invariants; returns a list of
// violations (empty = valid). Recomputes levels, minimality, weights, the
// main-path properties and the part formulas from scratch.
inline std::vector<std::string> validate_tree_parts(const TreeParts& p) {
    std::vector<std::string> bad;
    const Graph& t = p.tree;
    int n = t.vertex_count(), w = p.w;
    LevelTable L = compute_levels(t);
    RootedTree rt = root_tree(t, p.root);

    // (T1): root level, and every other vertex has a high branch toward it
    if (L.lambda[p.root] < w + 6) bad.push_back("T1: root below level w+6");
    for (Vertex v = 0; v < n; ++v)
        if (v != p.root && L.branch_value(v, rt.parent[v]) < w + 6) {
            bad.push_back("T1: vertex " + std::to_string(v) + " lacks a high upward branch");
            break;
        }

    auto minimal_of_level = [&](int level) {
        std::vector<char> in(n, 0);
        for (Vertex v = 0; v < n; ++v) in[v] = L.lambda[v] >= level;
        return detail::minimal_vertices(rt, in);
    };
    auto omega = [&](Vertex s) { return compute_weight(L, rt.subtree(s), w); };

    // (T2)
    {
        auto mins = minimal_of_level(w + 5);
        bool member = std::find(mins.begin(), mins.end(), p.u_top) != mins.end();
        if (!member) bad.push_back("T2: u_top is not a minimal level-(w+5) vertex");
        long best = std::numeric_limits<long>::max();
        for (Vertex v : mins) best = std::min(best, omega(v));
        if (member && (omega(p.u_top) != best || p.omega_min != best))
            bad.push_back("T2: u_top does not realize the minimum subtree weight");
    }

    // (T3): each u_k in L_k and globally minimal within L_k
    {
        std::pair<Vertex, int> chain[] = {{p.u_bot, w + 2}, {p.u_mid_lo, w + 3},
                                          {p.u_mid_hi, w + 4}, {p.u_top, w + 5}};
        for (auto [u, k] : chain) {
            if (L.lambda[u] < k) {
                bad.push_back("T3: chain vertex below its level");
                continue;
            }
            auto mins = minimal_of_level(k);
            if (std::find(mins.begin(), mins.end(), u) == mins.end())
                bad.push_back("T3: chain vertex not minimal in its level");
        }
    }

    // (T4)
    {
        Path up = rt.up_path(p.v_bot, p.u_top);
        Path expect(up.rbegin(), up.rend());
        if (p.main_path != expect) bad.push_back("T4: stored main path differs");
        auto on = [&](Vertex x) {
            return std::find(p.main_path.begin(), p.main_path.end(), x) != p.main_path.end();
        };
        if (!on(p.u_mid_hi) || !on(p.u_mid_lo))
            bad.push_back("T4: main path misses a middle chain vertex");
        if (!(p.v_bot != p.u_bot && rt.below_eq(p.u_bot, p.v_bot)))
            bad.push_back("T4: v_bot is not strictly above u_bot");
    }

    // (T5): descending chain in the tree order
    for (size_t i = 0; i + 1 < p.main_path.size(); ++i)
        if (!rt.strictly_below(p.main_path[i + 1], p.main_path[i])) {
            bad.push_back("T5: main path is not linearly ordered");
            break;
        }

    // (T6)
    {
        if (rt.children[p.u_top].size() == 2 && p.main_path.size() >= 2) {
            Vertex c0 = rt.children[p.u_top][0], c1 = rt.children[p.u_top][1];
            Vertex inner = p.main_path[1];
            Vertex t2 = rt.below_eq(inner, c0) ? c0 : c1;
            Vertex t1 = (t2 == c0) ? c1 : c0;
            if (!rt.below_eq(inner, t2))
                bad.push_back("T6: main path leaves both child subtrees");
            else if (omega(t1) < omega(t2))
                bad.push_back("T6: main-path side subtree is heavier");
        } else {
            bad.push_back("T6: u_top does not split into two subtrees");
        }
    }

    // part formulas and degree-2 interiors
    {
        auto interior_deg2 = [&](Vertex low, Vertex high) {
            Path seg = rt.up_path(low, high);
            for (size_t i = 1; i + 1 < seg.size(); ++i)
                if (t.degree(seg[i]) != 2) return false;
            return true;
        };
        if (!interior_deg2(p.u_top, p.v_top) || !interior_deg2(p.u_bot, p.v_bot))
            bad.push_back("ACD: a connecting segment has a branch vertex inside");

        std::vector<char> inD(n, 0), inTop(n, 0), cut(n, 0);
        for (Vertex v : rt.subtree(p.u_bot)) inD[v] = 1;
        for (Vertex v : rt.subtree(p.u_top)) inTop[v] = 1;
        std::vector<Vertex> D, C, A;
        for (Vertex v = 0; v < n; ++v)
            if (inD[v]) D.push_back(v);
        for (Vertex v : rt.up_path(p.u_bot, p.v_bot))
            if (v != p.v_bot) cut[v] = 1;
        for (Vertex v = 0; v < n; ++v)
            if (inTop[v] && !inD[v] && !cut[v]) C.push_back(v);
        std::fill(cut.begin(), cut.end(), 0);
        for (Vertex v : rt.up_path(p.u_top, p.v_top))
            if (v != p.v_top) cut[v] = 1;
        for (Vertex v = 0; v < n; ++v)
            if (!inTop[v] && !cut[v]) A.push_back(v);
        if (D != p.part_D) bad.push_back("ACD: part D differs from its formula");
        if (C != p.part_C) bad.push_back("ACD: part C differs from its formula");
        if (A != p.part_A) bad.push_back("ACD: part A differs from its formula");
    }
    return bad;
}

// ---------------------------------------------------------- random subcubic

inline Graph random_subcubic_tree(int n, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_subcubic_tree: need n >= 1");
    std::mt19937_64 rng(seed);
    GraphBuilder b;
    std::vector<int> deg;
    b.add_vertex();
    deg.push_back(0);
    for (int i = 1; i < n; ++i) {
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < i; ++v)
            if (deg[v] < 3) cand.push_back(v);
        std::uniform_int_distribution<size_t> pick(0, cand.size() - 1);
        Vertex host = cand[pick(rng)];
        b.add_vertex();
        deg.push_back(1);
        ++deg[host];
        b.add_edge(host, i);
    }
    return b.build();
}

} // namespace epobs
