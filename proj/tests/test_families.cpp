#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "chorded/canonical.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"

using namespace chorded;

TEST_CASE("basic families") {
    CHECK(star(9).order() == 10);
    CHECK(star(9).size() == 9);
    CHECK(star(9).degree(0) == 9);
    CHECK(path(5).size() == 4);
    CHECK(cycle(5).size() == 5);
    CHECK(cycle(5).min_degree() == 2);
    CHECK(complete(6).size() == 15);
    CHECK(complete_bipartite(2, 5).size() == 10);
    CHECK(complete_bipartite(2, 5).degree(0) == 5);
    CHECK(complete_multipartite({1, 1, 3}).order() == 5);
    CHECK(complete_multipartite({1, 1, 3}).size() == 7);  // 2n-3 at n=5
    CHECK(isomorphic(complete_multipartite({1, 1, 1}), complete(3)));
}

TEST_CASE("book_star = hub joined to matching plus isolated vertices") {
    // K1 v (tK2 u sK1): 1 + 2t + s vertices, 3t + s edges.
    for (int t = 0; t <= 3; ++t)
        for (int s = 0; s <= 4; ++s) {
            Graph g = book_star(t, s);
            CHECK(g.order() == 1 + 2 * t + s);
            CHECK(g.size() == 3 * t + s);
            if (g.order() > 1) CHECK(g.degree(0) == g.order() - 1);
        }
    CHECK(isomorphic(book_star(0, 7), star(7)));
}

TEST_CASE("clique_join and size-derived form") {
    Graph g = clique_join(3, 4);  // K3 v 4K1
    CHECK(g.order() == 7);
    CHECK(g.size() == 3 + 12);
    CHECK(g.degree(0) == 6);
    CHECK(g.degree(3) == 3);

    // m = k(k-1)/2 + k*t  =>  t = m/k - (k-1)/2 must be a positive integer.
    Graph h = clique_join_from_size(3, 12);
    CHECK(isomorphic(h, clique_join(3, 3)));
    CHECK(h.size() == 12);
    CHECK(clique_join_from_size(2, 9).size() == 9);   // K2 v 4K1
    CHECK(clique_join_from_size(4, 26).size() == 26); // K4 v 5K1
    CHECK_THROWS_AS(clique_join_from_size(2, 8), std::invalid_argument);   // t = 3.5
    CHECK_THROWS_AS(clique_join_from_size(4, 16), std::invalid_argument);  // t = 2.5
    CHECK_THROWS_AS(clique_join_from_size(3, 3), std::invalid_argument);   // t = 0
}

TEST_CASE("gnks follows its definition") {
    // (K_{k-2s} u (n-k+s)K1) v K_s, defined for k > 2s > 0, n >= k.
    Graph g = gnks(7, 4, 1);
    CHECK(g.order() == 7);
    // Edges: C(k-2s,2) + C(s,2) + s*(n-s) = C(2,2)... here 1 + 0 + 1*6 = 7.
    CHECK(g.size() == 7);
    Graph h = gnks(6, 4, 1);  // (K2 u 3K1) v K1
    CHECK(h.order() == 6);
    CHECK(h.size() == 6);
    CHECK(isomorphic(h, book_star(1, 3)));
    CHECK_THROWS_AS(gnks(6, 4, 2), std::invalid_argument);  // k = 2s
    CHECK_THROWS_AS(gnks(3, 4, 1), std::invalid_argument);  // n < k
}

TEST_CASE("small-size extremal family") {
    // t = floor(m/3) triangles through the hub plus m-3t pendant edges.
    for (int m = 4; m <= 8; ++m) {
        Graph g = theorem12_extremal(m);
        CHECK(g.size() == m);
        CHECK(g.is_isolate_free());
        CHECK(g.is_connected());
    }
    CHECK(isomorphic(theorem12_extremal(6), book_star(2, 0)));
    CHECK(isomorphic(theorem12_extremal(4), book_star(1, 1)));
    CHECK_THROWS_AS(theorem12_extremal(3), std::invalid_argument);
    CHECK_THROWS_AS(theorem12_extremal(9), std::invalid_argument);
}

TEST_CASE("subdivided K4 and wheel-like fixture") {
    Graph s = sk4();
    CHECK(s.order() == 5);
    CHECK(s.size() == 7);
    CHECK(s.max_degree() == 3);
    Graph w = k1_join_p4();
    CHECK(w.order() == 5);
    CHECK(w.size() == 7);
    CHECK(w.degree(0) == 4);
    CHECK_FALSE(isomorphic(s, w));
}

TEST_CASE("named fixtures have the documented order and size") {
    struct Row { const char* name; int n; long long m; };
    for (Row r : {Row{"H1", 7, 9}, Row{"H2", 7, 9}, Row{"H3", 6, 7},
                  Row{"F1", 7, 8}, Row{"F2", 8, 9}, Row{"F3", 8, 9}}) {
        Graph g = fixture(r.name);
        CHECK(g.order() == r.n);
        CHECK(g.size() == r.m);
        CHECK(g.is_connected());
        // Vertex 0 is the distinguished high-degree vertex on a triangle 0-1-2.
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK(g.has_edge(0, 2));
    }
    CHECK(fixture("H1").degree(0) == 5);
    CHECK_THROWS_AS(fixture("H4"), std::invalid_argument);
}

TEST_CASE("family spec grammar") {
    CHECK(isomorphic(family(parse_family_spec("star:9")), star(9)));
    CHECK(isomorphic(family(parse_family_spec("complete_bipartite:2,5")),
                     complete_bipartite(2, 5)));
    CHECK(isomorphic(family(parse_family_spec("complete_multipartite:1,1,3")),
                     complete_multipartite({1, 1, 3})));
    CHECK(isomorphic(family(parse_family_spec("sk4")), sk4()));
    CHECK(isomorphic(family(parse_family_spec("fixture:F2")), fixture("F2")));
    CHECK(isomorphic(family(parse_family_spec("book_star:2,0")), book_star(2, 0)));
    CHECK(isomorphic(family(parse_family_spec("gnks:7,4,1")), gnks(7, 4, 1)));
    CHECK_THROWS_AS(parse_family_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(family(parse_family_spec("star")), std::invalid_argument);
    CHECK_THROWS_AS(family(parse_family_spec("nonsense:3")), std::invalid_argument);
    CHECK_THROWS_AS(family(parse_family_spec("star:2,3")), std::invalid_argument);
}
