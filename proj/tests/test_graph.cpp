#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "chorded/families.hpp"
#include "chorded/graph.hpp"

using namespace chorded;

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.count() == 0);
    CHECK_FALSE(b.any());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 4);
    CHECK(b.any());
    CHECK(b.test(64));
    CHECK_FALSE(b.test(65));
    CHECK(b.next(0) == 0);
    CHECK(b.next(1) == 63);
    CHECK(b.next(65) == 129);
    CHECK(b.next(130) == -1);
    b.reset(64);
    CHECK(b.count() == 3);

    Bitset c(130);
    c.set(63);
    c.set(129);
    c.set(100);
    CHECK(b.count_and(c) == 2);
}

TEST_CASE("graph mutators and accessors") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 0);
    CHECK(g.max_degree() == 2);
    CHECK_FALSE(g.is_isolate_free());
    g.remove_edge(0, 1);
    CHECK(g.size() == 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);

    Graph h = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto e = h.edges();
    CHECK(e.size() == 3);
    for (auto [u, v] : e) CHECK(u < v);
}

TEST_CASE("components, induced, permuted, without_isolated") {
    // Two triangles plus an isolated vertex.
    Graph g = build_graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = g.components();
    CHECK(comps.size() == 3);
    CHECK_FALSE(g.is_connected());
    CHECK(g.without_isolated().order() == 6);
    CHECK(g.without_isolated().size() == 6);

    Graph t = g.induced({3, 4, 5});
    CHECK(t.order() == 3);
    CHECK(t.size() == 3);
    CHECK(t.has_edge(0, 1));

    // permuted: vertex i becomes perm[i]; edge 0-1 of P3 becomes 2-1.
    Graph p = path(3).permuted({2, 1, 0});
    CHECK(p.has_edge(2, 1));
    CHECK(p.has_edge(1, 0));
    CHECK_FALSE(p.has_edge(0, 2));
}

TEST_CASE("join and disjoint union") {
    Graph g = join(complete(1), copies(2, complete(2)));  // K1 v 2K2
    CHECK(g.order() == 5);
    CHECK(g.size() == 6);
    CHECK(g.degree(0) == 4);

    Graph u = disjoint_union(path(2), path(3));
    CHECK(u.order() == 5);
    CHECK(u.size() == 3);
    CHECK_FALSE(u.is_connected());
}

TEST_CASE("k-core peeling") {
    // Triangle with a pendant path: 0-1-2-0, 2-3, 3-4.
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    CHECK(k_core_vertices(g, 2) == std::vector<int>{0, 1, 2});
    Graph core = k_core(g, 2);
    CHECK(core.order() == 3);
    CHECK(core.size() == 3);
    CHECK(k_core_vertices(g, 3).empty());
    // 1-core of anything isolate-free is the graph itself.
    CHECK(k_core_vertices(g, 1).size() == 5);
    // K4 is its own 3-core.
    CHECK(k_core_vertices(complete(4), 3).size() == 4);
}

TEST_CASE("blocks: bowtie") {
    // Two triangles sharing vertex 2.
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto bd = blocks(g);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<int>{2});
    std::set<std::vector<int>> bs(bd.blocks.begin(), bd.blocks.end());
    CHECK(bs.count({0, 1, 2}) == 1);
    CHECK(bs.count({2, 3, 4}) == 1);
}

TEST_CASE("blocks: bridges and cycles") {
    // Path P4: every edge is a bridge, middle vertices are cut vertices.
    auto bd = blocks(path(4));
    CHECK(bd.blocks.size() == 3);
    CHECK(bd.cut_vertices == std::vector<int>{1, 2});
    for (const auto& b : bd.blocks) CHECK(b.size() == 2);

    // C5 is a single block, no cut vertices.
    bd = blocks(cycle(5));
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.blocks[0].size() == 5);
    CHECK(bd.cut_vertices.empty());

    // Isolated vertices form no block.
    bd = blocks(Graph(3));
    CHECK(bd.blocks.empty());
}

TEST_CASE("blocks: every edge in exactly one block") {
    // Theta-ish graph: C4 with a pendant triangle.
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {3, 5}});
    auto bd = blocks(g);
    long long covered = 0;
    for (const auto& b : bd.blocks) covered += g.induced(b).size();
    CHECK(covered == g.size());
}
