// Acceptance gate: one pass/fail line per criterion; exit code is the number
// of failed criteria. Each criterion is independent and states exactly what
// it verified, including honest reds.

#include <epobs/constructions.hpp>
#include <epobs/graph.hpp>
#include <epobs/tree_analysis.hpp>
#include <epobs/verification.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace epobs;

namespace {

int failed_criteria = 0;

using Problems = std::vector<std::string>;

template <class Body>
void criterion(int id, const char* name, Body body) {
    Problems problems;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = problems.empty();
    if (!ok) ++failed_criteria;
    std::printf("criterion %2d [%s] %s (%.1fs)\n", id, ok ? "PASS" : "FAIL", name, secs);
    for (const auto& p : problems) std::printf("              - %s\n", p.c_str());
    std::fflush(stdout);
}

void expect(Problems& out, bool cond, const std::string& msg) {
    if (!cond) out.push_back(msg);
}

// ------------------------------------------------------------------------

void c1_wall_pathwidth(Problems& out) {
    for (int r = 1; r <= 6; ++r) {
        CondensedWall w = build_condensed_wall(r);
        auto d = wall_decomposition(w);
        auto bad = validate_path_decomposition(w.graph, d);
        expect(out, bad.empty(), "decomposition invalid at r=" + std::to_string(r));
        expect(out, d.width() <= 5, "width > 5 at r=" + std::to_string(r));
    }
    auto exact = pathwidth_exact(build_condensed_wall(2).graph);
    expect(out, exact.width <= 5,
           "exact pathwidth " + std::to_string(exact.width) + " > 5 at r=2");
}

void c2_no_two_linkages(Problems& out) {
    for (int r : {2, 3}) {
        CondensedWall w = build_condensed_wall(r);
        auto rep = find_two_linkages(w.graph, {w.a}, {w.b}, {w.c}, {w.d},
                                     DisjointnessMode::edge);
        expect(out, rep.verdict == Verdict::exhausted_no_witness,
               "verdict " + std::string(to_string(rep.verdict)) + " at r=" + std::to_string(r));
    }
}

void c3_wall_robustness(Problems& out) {
    for (int r : {2, 3}) {
        CondensedWall w = build_condensed_wall(r);
        auto rep = verify_hitting_robustness(w, r - 1);
        expect(out, rep.verdict == Verdict::holds,
               "verdict " + std::string(to_string(rep.verdict)) + " at r=" + std::to_string(r));
    }
}

void c4_grid_proposition(Problems& out) {
    {
        GridLinkageInstance g = build_grid_instance(1);
        auto two = find_two_linkages(g.graph, g.A, g.B, g.C, g.D, DisjointnessMode::vertex);
        expect(out, two.verdict == Verdict::exhausted_no_witness,
               "r=1 two-linkage verdict " + std::string(to_string(two.verdict)));
        for (Vertex v = -1; v < g.graph.vertex_count(); ++v) {
            VertexSet S;
            if (v >= 0) S.insert(v);
            if (!find_linkage(g.graph, g.A, g.B, g.C, g.D, DisjointnessMode::vertex, S))
                out.push_back("r=1: no linkage after deleting vertex " + std::to_string(v));
        }
    }
    {
        GridLinkageInstance g = build_grid_instance(2);
        int n = g.graph.vertex_count();
        long cases = 0;
        for (Vertex u = 0; u <= n; ++u)
            for (Vertex v = u; v <= n; ++v) {
                if (u < n && v == u) continue; // singleton {u} is the v==n case
                VertexSet S; // u==n or v==n stands for "not used"
                if (u < n) S.insert(u);
                if (v < n) S.insert(v);
                ++cases;
                if (!find_linkage(g.graph, g.A, g.B, g.C, g.D, DisjointnessMode::vertex, S))
                    out.push_back("r=2: no linkage after deleting {" + std::to_string(u) +
                                  "," + std::to_string(v) + "}");
            }
        expect(out, cases == 2081, "r=2 case count " + std::to_string(cases) + " != 2081");
        // the r=2 two-linkage exhaustion is reported but not gated
        auto two = find_two_linkages(g.graph, g.A, g.B, g.C, g.D,
                                     DisjointnessMode::vertex, 5'000'000);
        std::printf("              note: grid r=2 two-linkage search: %s (%llu nodes)\n",
                    to_string(two.verdict),
                    static_cast<unsigned long long>(two.stats.nodes));
    }
}

void c5_ladder_six_exclusion(Problems& out) {
    LadderInstance lad6 = build_ladder(6);
    for (int r : {3, 4}) {
        CondensedWall w = build_condensed_wall(r);
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < w.graph.vertex_count(); ++v)
            if (v != w.a && v != w.b) keep.push_back(v);
        auto sub = induced_subgraph(w.graph, keep);
        auto rep = find_subdivision(sub.graph, lad6.graph);
        expect(out, rep.verdict == Verdict::exhausted_no_witness,
               "verdict " + std::string(to_string(rep.verdict)) + " at r=" + std::to_string(r));
    }
}

void c6_binary_tree_pathwidth_formula(Problems& out) {
    // stated formula: pathwidth(full binary tree of height h) = ceil((h+1)/2)
    for (int h = 0; h <= 6; ++h) {
        int pw = tree_pathwidth(build_binary_tree(h).graph);
        int formula = (h + 2) / 2;
        expect(out, pw == formula,
               "h=" + std::to_string(h) + ": pathwidth " + std::to_string(pw) +
                   " != formula " + std::to_string(formula));
    }
    for (int h = 0; h <= 3; ++h) {
        Graph t = build_binary_tree(h).graph;
        expect(out, tree_pathwidth(t) == pathwidth_exact(t).width,
               "h=" + std::to_string(h) + ": tree algorithm disagrees with subset DP");
    }
}

void c7_embedding_height_vs_pathwidth(Problems& out) {
    for (int seed = 0; seed < 200; ++seed) {
        int n = 4 + seed % 57;
        Graph t = random_subcubic_tree(n, static_cast<std::uint64_t>(seed));
        if (max_Bh(t) < tree_pathwidth(t) - 1) {
            out.push_back("violation at seed " + std::to_string(seed));
            return;
        }
    }
}

void c8_weight_lower_bound(Problems& out) {
    for (int k : {11, 12, 13}) {
        long bound = (1L << (k - 10)) - 2;
        for (int subdivide : {0, 1}) {
            Graph t = build_binary_tree(k).graph;
            if (subdivide) t = subdivide_all_edges(t, 1);
            LevelTable L = compute_levels(t);
            std::vector<Vertex> all(static_cast<size_t>(t.vertex_count()));
            for (Vertex v = 0; v < t.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
            long omega = compute_weight(L, all, 10);
            expect(out, omega >= bound,
                   "k=" + std::to_string(k) + (subdivide ? " subdivided" : " binary") +
                       ": weight " + std::to_string(omega) + " < " + std::to_string(bound));
        }
    }
}

void c9_construction_invariants(Problems& out) {
    for (int r : {2, 3}) {
        CounterexampleInstance inst = build_ladder_counterexample(r);
        for (const auto& m : validate_counterexample(inst))
            out.push_back("ladder r=" + std::to_string(r) + ": " + m);
        const CondensedWall& w = inst.wall;
        auto comps = components(inst.graph, {w.a, w.b, w.c, w.d});
        expect(out, comps.size() == 4,
               "ladder r=" + std::to_string(r) + ": removing the four terminals leaves " +
                   std::to_string(comps.size()) + " components, not 4");
    }
    struct Cfg {
        int height, w;
    };
    for (Cfg cfg : {Cfg{9, 0}, Cfg{10, 1}}) {
        TreeParts parts = decompose_tree(build_binary_tree(cfg.height).graph, cfg.w);
        for (const auto& m : validate_tree_parts(parts))
            out.push_back("decomposition w=" + std::to_string(cfg.w) + ": " + m);
        CounterexampleInstance inst = build_tree_counterexample(parts, 5, 8);
        for (const auto& m : validate_counterexample(inst))
            out.push_back("tree w=" + std::to_string(cfg.w) + ": " + m);
        long checked = 0;
        for (Vertex v : inst.pattern_branch) {
            if (std::find(parts.main_path.begin(), parts.main_path.end(), v) !=
                parts.main_path.end())
                continue;
            auto bad = validate_local_structure(inst, v);
            ++checked;
            if (!bad.empty()) {
                out.push_back("tree w=" + std::to_string(cfg.w) + ", vertex " +
                              std::to_string(v) + ": " + bad.front());
                return;
            }
        }
        expect(out, checked > 0, "no off-main-path branch vertices checked");
    }
}

void c10_deletion_survival(Problems& out) {
    {
        CounterexampleInstance inst = build_ladder_counterexample(3);
        for (const Edge& e : inst.graph.edges()) {
            auto m = reference_subdivision(inst, {e});
            if (!validate_subdivision(inst.graph, inst.pattern, m).empty()) {
                out.push_back("r=3: invalid model after deleting {" + std::to_string(e.u) +
                              "," + std::to_string(e.v) + "}");
                return;
            }
        }
    }
    {
        CounterexampleInstance inst = build_ladder_counterexample(4);
        const auto& edges = inst.graph.edges();
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                auto m = reference_subdivision(inst, {edges[i], edges[j]});
                if (!validate_subdivision(inst.graph, inst.pattern, m).empty()) {
                    out.push_back("r=4: invalid model after deleting pair " +
                                  std::to_string(i) + "," + std::to_string(j));
                    return;
                }
            }
    }
}

void c11_level_oracle_equivalence(Problems& out) {
    // independent oracle: lambda(v) >= h iff a 3-armed spider of B_h legs
    // embeds as a subdivision pinned at v
    auto spider = [](int h) {
        GraphBuilder b;
        Vertex center = b.add_vertex();
        for (int k = 0; k < 3; ++k) {
            BhTree t = build_binary_tree(h);
            Vertex off = b.vertex_count();
            for (Vertex x = 0; x < t.graph.vertex_count(); ++x) b.add_vertex();
            for (const Edge& e : t.graph.edges()) b.add_edge(off + e.u, off + e.v);
            b.add_edge(center, off + t.root);
        }
        return b.build();
    };
    Graph s1 = spider(1);
    for (int seed = 0; seed < 500; ++seed) {
        int n = 4 + seed % 11; // 4..14 vertices
        Graph t = random_subcubic_tree(n, static_cast<std::uint64_t>(seed));
        LevelTable L = compute_levels(t);
        for (Vertex v = 0; v < t.vertex_count(); ++v) {
            int lam = L.lambda[static_cast<size_t>(v)];
            if (t.degree(v) < 3) {
                if (lam != -1) {
                    out.push_back("seed " + std::to_string(seed) +
                                  ": level defined at a low-degree vertex");
                    return;
                }
                continue;
            }
            // three disjoint height-2 legs need 22 vertices, impossible here
            auto rep = find_subdivision(t, s1, default_node_budget, {{0, v}});
            int oracle = rep.verdict == Verdict::witness ? 1 : 0;
            if (lam != oracle) {
                out.push_back("seed " + std::to_string(seed) + " vertex " +
                              std::to_string(v) + ": level " + std::to_string(lam) +
                              " vs oracle " + std::to_string(oracle));
                return;
            }
        }
    }
}

void c12_full_scale_gap(Problems& out) {
    // the headline non-existence claim is out of desk reach: the exhaustive
    // pair search must time out on the real instance and must never say holds
    CounterexampleInstance inst = build_ladder_counterexample(2);
    auto rep = find_two_edge_disjoint_subdivisions(inst.graph, inst.pattern);
    expect(out, rep.verdict == Verdict::timeout,
           "expected timeout, got " + std::string(to_string(rep.verdict)));
    expect(out, rep.verdict != Verdict::holds, "search overclaimed a universal result");
}

} // namespace

int main() {
    criterion(1, "condensed wall has pathwidth at most 5", c1_wall_pathwidth);
    criterion(2, "wall has no two edge-disjoint linkages (r=2,3)", c2_no_two_linkages);
    criterion(3, "wall keeps a linkage under any r-1 edge deletions", c3_wall_robustness);
    criterion(4, "grid: no two disjoint linkages, robust to small deletions",
              c4_grid_proposition);
    criterion(5, "hub-stripped wall excludes ladder-6 subdivisions", c5_ladder_six_exclusion);
    criterion(6, "binary-tree pathwidth formula ceil((h+1)/2)",
              c6_binary_tree_pathwidth_formula);
    criterion(7, "embeddable binary-tree height >= pathwidth - 1",
              c7_embedding_height_vs_pathwidth);
    criterion(8, "weight lower bound 2^(k-10) - 2", c8_weight_lower_bound);
    criterion(9, "counterexample construction invariants", c9_construction_invariants);
    criterion(10, "reference subdivision survives all in-budget deletions",
              c10_deletion_survival);
    criterion(11, "level computation matches the pinned-spider oracle",
              c11_level_oracle_equivalence);
    criterion(12, "full-scale two-subdivision search times out, never holds",
              c12_full_scale_gap);
    std::printf("%d of 12 criteria failed\n", failed_criteria);
    return failed_criteria;
}
