#include <catch2/catch_amalgamated.hpp>
#include <epobs/constructions.hpp>
#include <epobs/verification.hpp>

using namespace epobs;

TEST_CASE("condensed wall vertex and edge counts") {
    for (int r = 1; r <= 6; ++r) {
        CondensedWall w = build_condensed_wall(r);
        INFO("r " << r);
        CHECK(w.graph.vertex_count() == 2 * r * r + r + 3);
        CHECK(w.graph.edge_count() == 4 * r * r + 2 * r);
        CHECK(is_connected(w.graph));
    }
    CondensedWall w1 = build_condensed_wall(1);
    CHECK(w1.graph.vertex_count() == 6);
    CHECK(w1.graph.edge_count() == 6);
    CondensedWall w2 = build_condensed_wall(2);
    CHECK(w2.graph.vertex_count() == 13);
    CHECK(w2.graph.edge_count() == 20);
    CHECK_THROWS_AS(build_condensed_wall(0), std::invalid_argument);
}

TEST_CASE("condensed wall structure") {
    CondensedWall w = build_condensed_wall(3);
    CHECK(w.c == w.z.front());
    CHECK(w.d == w.z.back());
    CHECK(w.graph.label(w.a) == "a");
    CHECK(w.graph.label(w.u(2, 5)) == "u^2_5");
    // hubs see the row ends of every layer
    for (int j = 1; j <= 3; ++j) {
        CHECK(w.graph.has_edge(w.a, w.u(j, 1)));
        CHECK(w.graph.has_edge(w.b, w.u(j, 6)));
        CHECK(w.graph.has_edge(w.z[j - 1], w.z[j]));
        // evens attach below, odds above
        CHECK(w.graph.has_edge(w.z[j - 1], w.u(j, 2)));
        CHECK(w.graph.has_edge(w.z[j], w.u(j, 1)));
        CHECK_FALSE(w.graph.has_edge(w.z[j - 1], w.u(j, 1)));
    }
    CHECK(is_simple_path(w.graph, w.row_path(2)));
}

TEST_CASE("wall layer groups partition the edge set") {
    for (int r : {1, 2, 3}) {
        CondensedWall w = build_condensed_wall(r);
        EdgeSet all;
        size_t total = 0;
        for (int j = 1; j <= r; ++j) {
            EdgeSet grp = w.layer_group(j);
            total += grp.size();
            all.insert(grp.begin(), grp.end());
        }
        INFO("r " << r);
        CHECK(total == all.size()); // pairwise disjoint
        CHECK(all.size() == static_cast<size_t>(w.graph.edge_count()));
        for (const Edge& e : all) CHECK(w.graph.has_edge(e.u, e.v));
    }
}

TEST_CASE("ladder counts and branch set") {
    for (int len : {1, 2, 5, 71}) {
        LadderInstance L = build_ladder(len);
        INFO("length " << len);
        CHECK(L.graph.vertex_count() == 2 * len);
        CHECK(L.graph.edge_count() == 3 * len - 2);
    }
    LadderInstance L = build_ladder(6);
    CHECK(L.branch_set().size() == 8); // i = 2..5 on both sides
    CHECK(L.graph.has_edge(L.u(3), L.v(3)));
    CHECK(L.graph.has_edge(L.u(3), L.u(4)));
    CHECK_FALSE(L.graph.has_edge(L.u(3), L.v(4)));
    CHECK_THROWS_AS(build_ladder(0), std::invalid_argument);
}

TEST_CASE("grid instance layout") {
    GridLinkageInstance g = build_grid_instance(1);
    CHECK(g.side() == 4);
    CHECK(g.graph.vertex_count() == 16);
    CHECK(g.graph.edge_count() == 24);
    CHECK(g.A.size() == 2);
    CHECK(g.B.size() == 2);
    CHECK(g.C.size() == 4);
    CHECK(g.D.size() == 4);
    CHECK(g.A.count(g.at(2, 1)) == 1);
    CHECK(g.B.count(g.at(3, 3)) == 1);
    CHECK(g.D.count(g.at(1, 2)) == 1);
    CHECK(g.C.count(g.at(4, 2)) == 1);
    GridLinkageInstance g2 = build_grid_instance(2);
    CHECK(g2.graph.vertex_count() == 64);
    CHECK(g2.A.size() == 6);
}

TEST_CASE("binary trees, linked trees, subdivisions") {
    BhTree b3 = build_binary_tree(3);
    CHECK(b3.graph.vertex_count() == 15);
    CHECK(b3.graph.edge_count() == 14);
    CHECK(b3.graph.degree(b3.root) == 2);

    BhTree linked = v_link(b3, 4);
    CHECK(linked.graph.vertex_count() == 19);
    CHECK(linked.graph.degree(linked.attachment) == 1);
    CHECK(linked.graph.degree(b3.root) == 3);

    Graph s = subdivide_all_edges(b3.graph, 2);
    CHECK(s.vertex_count() == 15 + 2 * 14);
    CHECK(s.edge_count() == 3 * 14);
    CHECK(is_tree(s));
}

TEST_CASE("pattern path split of a ladder") {
    LadderInstance L = build_ladder(71);
    auto pp = split_into_u_paths(L.graph, L.branch_set());
    // 69 rungs, 68 side segments per side, two end arcs
    CHECK(pp.u_paths.size() == 69 + 68 + 68 + 2);
    CHECK(pp.pendants.empty());
    for (const Path& p : pp.u_paths) {
        CHECK(is_simple_path(L.graph, p));
        CHECK(L.branch_set().count(p.front()) == 1);
        CHECK(L.branch_set().count(p.back()) == 1);
    }
}

TEST_CASE("pattern path split reports pendants and refuses stray branches") {
    // path of 4 with U only at one end vertex of degree 2: vertex 1
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto pp = split_into_u_paths(p4, {1});
    CHECK(pp.u_paths.empty());
    CHECK(pp.pendants.size() == 2); // toward 0 and toward 3
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(split_into_u_paths(star, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("ladder counterexample construction and validation") {
    CounterexampleInstance inst = build_ladder_counterexample(2);
    CHECK(inst.length == 71);
    CHECK(inst.cut_lo == 24);
    CHECK(inst.cut_hi == 48);
    // the four cut-rung branch vertices merge with the wall terminals
    LadderInstance lad = build_ladder(71);
    CHECK(inst.eps.at(lad.u(24)) == inst.wall.a);
    CHECK(inst.eps.at(lad.v(24)) == inst.wall.b);
    CHECK(inst.eps.at(lad.v(48)) == inst.wall.c);
    CHECK(inst.eps.at(lad.u(48)) == inst.wall.d);
    CHECK(inst.bundles.size() == 207 - 2);
    auto bad = validate_counterexample(inst);
    for (const auto& m : bad) INFO(m);
    CHECK(bad.empty());

    CHECK_THROWS_AS(build_ladder_counterexample(1), std::invalid_argument);
    CHECK_THROWS_AS(build_ladder_counterexample(2, 71, 2, 48), std::invalid_argument);
    CHECK_THROWS_AS(build_ladder_counterexample(2, 71, 24, 26), std::invalid_argument);
}

TEST_CASE("ladder reference subdivision survives single deletions") {
    CounterexampleInstance inst = build_ladder_counterexample(3);
    SubdivisionModel m0 = reference_subdivision(inst, {});
    auto bad = validate_subdivision(inst.graph, inst.pattern, m0);
    for (const auto& msg : bad) INFO(msg);
    CHECK(bad.empty());

    // a route edge, a spine edge, a hub edge
    const auto& w = inst.wall;
    std::vector<Edge> dels = {Edge(inst.bundles[0].routes[0][0], inst.bundles[0].routes[0][1]),
                              Edge(w.z[0], w.z[1]), Edge(w.a, w.u(1, 1))};
    for (const Edge& e : dels) {
        SubdivisionModel m = reference_subdivision(inst, {e});
        auto viol = validate_subdivision(inst.graph, inst.pattern, m);
        for (const auto& msg : viol) INFO(msg);
        CHECK(viol.empty());
        for (const auto& [pe, gp] : m.edge_paths)
            for (size_t i = 0; i + 1 < gp.size(); ++i)
                CHECK_FALSE(Edge(gp[i], gp[i + 1]) == e);
    }
    CHECK_THROWS_AS(reference_subdivision(inst, {dels[0], dels[1]}), std::invalid_argument);
}

TEST_CASE("tree counterexample construction and validation") {
    TreeParts parts = decompose_tree(build_binary_tree(9).graph, 0);
    CounterexampleInstance inst = build_tree_counterexample(parts, 5, 8);
    CHECK(inst.kind == CounterexampleInstance::Kind::tree);
    for (int zi = 0; zi < 4; ++zi) CHECK(inst.Z[zi].size() == 5);
    auto bad = validate_counterexample(inst);
    for (const auto& m : bad) INFO(m);
    CHECK(bad.empty());
    CHECK_THROWS_AS(build_tree_counterexample(parts, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_tree_counterexample(parts, 5, 1), std::invalid_argument);
}

TEST_CASE("tree local structure off the main path") {
    TreeParts parts = decompose_tree(build_binary_tree(9).graph, 0);
    CounterexampleInstance inst = build_tree_counterexample(parts, 5, 8);
    int checked = 0;
    for (Vertex v : inst.pattern_branch) {
        if (checked >= 3) break;
        if (std::find(parts.main_path.begin(), parts.main_path.end(), v) !=
            parts.main_path.end())
            continue;
        auto bad = validate_local_structure(inst, v);
        for (const auto& m : bad) INFO(m);
        CHECK(bad.empty());
        ++checked;
    }
    CHECK(checked == 3);
    CHECK_THROWS_AS(validate_local_structure(inst, parts.u_top), std::invalid_argument);
}

TEST_CASE("tree reference subdivision survives deletions within budget") {
    TreeParts parts = decompose_tree(build_binary_tree(9).graph, 0);
    CounterexampleInstance inst = build_tree_counterexample(parts, 5, 8);
    SubdivisionModel m0 = reference_subdivision(inst, {});
    auto bad = validate_subdivision(inst.graph, inst.pattern, m0);
    for (const auto& msg : bad) INFO(msg);
    CHECK(bad.empty());

    const auto& w = inst.wall;
    EdgeSet two = {Edge(inst.Z[0][0][0], inst.Z[0][0][1]), Edge(w.z[2], w.z[3])};
    SubdivisionModel m2 = reference_subdivision(inst, two);
    auto viol = validate_subdivision(inst.graph, inst.pattern, m2);
    for (const auto& msg : viol) INFO(msg);
    CHECK(viol.empty());
    for (const auto& [pe, gp] : m2.edge_paths)
        for (size_t i = 0; i + 1 < gp.size(); ++i)
            CHECK(two.count(Edge(gp[i], gp[i + 1])) == 0);

    EdgeSet three = two;
    three.insert(Edge(w.a, w.u(1, 1)));
    CHECK_THROWS_AS(reference_subdivision(inst, three), std::invalid_argument);
}
