#ifndef CHORDED_FAMILIES_HPP
#define CHORDED_FAMILIES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

// Named graph constructors. Vertex ordering is fixed so builds are
// reproducible byte-for-byte: hub/clique vertices come first, then
// matching-edge vertices in pairs, then isolated-side vertices.

Graph star(int m);                             // K_{1,m}, hub = 0
Graph path(int n);                             // P_n, 0-1-2-...
Graph cycle(int n);                            // C_n
Graph complete(int n);                         // K_n
Graph complete_bipartite(int a, int b);        // K_{a,b}, first side = 0..a-1
Graph complete_multipartite(const std::vector<int>& parts);
Graph book_star(int t, int s);                 // K_1 v (tK_2 u sK_1)
Graph clique_join(int k, int t);               // K_k v tK_1
Graph clique_join_from_size(int k, long long m);  // K_k v (m/k-(k-1)/2)K_1
Graph gnks(int n, int k, int s);               // (K_{k-2s} u (n-k+s)K_1) v K_s
Graph theorem12_extremal(int m);               // G_m, 4 <= m <= 8
Graph sk4();                                   // K_4 with one edge subdivided
Graph k1_join_p4();                            // K_1 v P_4

// Small named benchmark graphs with frozen edge lists. In each, vertex 0
// is the high-degree vertex, 1-2 are the triangle pair attached to it, and
// the remaining vertices follow in a fixed order.
//   H1: 7 vertices, 9 edges    H2: 7 vertices, 9 edges    H3: 6 vertices, 7 edges
//   F1: 7 vertices, 8 edges    F2: 8 vertices, 9 edges    F3: 8 vertices, 9 edges
Graph fixture(std::string_view name);

struct FamilySpec {
    std::string name;
    std::vector<long long> params;
    std::string text_param;  // for fixture names
};

// Compact grammar "name" or "name:p1,p2,..." (fixtures: "fixture:H1").
FamilySpec parse_family_spec(std::string_view text);
Graph family(const FamilySpec& spec);

}  // namespace chorded

#endif
