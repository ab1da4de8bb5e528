#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "chorded/enumerate.hpp"
#include "chorded/families.hpp"
#include "chorded/graph.hpp"
#include "chorded/spectral.hpp"

using namespace chorded;

namespace {

Graph random_connected(int n, double p, std::mt19937_64& rng) {
    // Random spanning tree first, then extra random edges.
    Graph g(n);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) g.add_edge(order[i], order[rng() % i]);
    std::bernoulli_distribution coin(p);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (!g.has_edge(i, j) && coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("adding an edge to a connected graph strictly raises the radius") {
    std::mt19937_64 rng(1001);
    int done = 0;
    while (done < 500) {
        int n = 3 + static_cast<int>(rng() % 8);  // 3..10
        Graph g = random_connected(n, 0.25, rng);
        std::vector<std::pair<int, int>> non_edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (!g.has_edge(i, j)) non_edges.emplace_back(i, j);
        if (non_edges.empty()) continue;
        auto [u, v] = non_edges[rng() % non_edges.size()];
        double before = spectral_radius(g).rho;
        g.add_edge(u, v);
        double after = spectral_radius(g).rho;
        REQUIRE(after > before + 1e-10);
        ++done;
    }
}

TEST_CASE("rotating edges toward a heavier Perron vertex strictly raises the radius") {
    // For connected G with Perron vector x and x_u >= x_v, moving a set of
    // v's private neighbors over to u increases the radius strictly.
    std::mt19937_64 rng(2002);
    int done = 0;
    while (done < 500) {
        int n = 4 + static_cast<int>(rng() % 7);  // 4..10
        Graph g = random_connected(n, 0.3, rng);
        auto x = perron_vector(g);
        int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % n);
        if (u == v) continue;
        if (x[u] < x[v]) std::swap(u, v);
        // Candidates: neighbors of v that are not u and not neighbors of u.
        std::vector<int> movable;
        const Bitset& nv = g.neighbors(v);
        for (int w = nv.next(0); w != -1; w = nv.next(w + 1))
            if (w != u && !g.has_edge(u, w)) movable.push_back(w);
        if (movable.empty()) continue;
        // Move a random nonempty prefix after shuffling.
        std::shuffle(movable.begin(), movable.end(), rng);
        size_t take = 1 + rng() % movable.size();
        double before = spectral_radius(g).rho;
        for (size_t i = 0; i < take; ++i) {
            g.remove_edge(v, movable[i]);
            g.add_edge(u, movable[i]);
        }
        double after = spectral_radius(g).rho;
        REQUIRE(after > before + 1e-10);
        ++done;
    }
}

TEST_CASE("equitable quotient matrices share the radius of the graph") {
    std::mt19937_64 rng(3003);
    int done = 0;
    // Structured instances with known equitable partitions.
    while (done < 100) {
        Graph g;
        std::vector<std::vector<int>> parts;
        switch (done % 3) {
            case 0: {  // K_k v tK1, parts = {clique, independent set}
                int k = 2 + static_cast<int>(rng() % 4);
                int t = 1 + static_cast<int>(rng() % 6);
                g = clique_join(k, t);
                parts.resize(2);
                for (int v = 0; v < k; ++v) parts[0].push_back(v);
                for (int v = k; v < g.order(); ++v) parts[1].push_back(v);
                break;
            }
            case 1: {  // complete multipartite, parts = the sides
                int r = 2 + static_cast<int>(rng() % 3);
                std::vector<int> sizes;
                int base = 0;
                for (int i = 0; i < r; ++i) sizes.push_back(1 + static_cast<int>(rng() % 4));
                g = complete_multipartite(sizes);
                for (int s : sizes) {
                    std::vector<int> part;
                    for (int v = base; v < base + s; ++v) part.push_back(v);
                    parts.push_back(part);
                    base += s;
                }
                break;
            }
            default: {  // K1 v (tK2 u sK1): hub / matched pairs / isolated side
                int t = 1 + static_cast<int>(rng() % 4);
                int s = static_cast<int>(rng() % 4);
                g = book_star(t, s);
                parts.resize(s > 0 ? 3 : 2);
                parts[0] = {0};
                for (int v = 1; v <= 2 * t; ++v) parts[1].push_back(v);
                for (int v = 2 * t + 1; v < g.order(); ++v) parts[2 % parts.size()].push_back(v);
                break;
            }
        }
        auto q = quotient_matrix(g, parts);
        REQUIRE(q.equitable);
        REQUIRE(matrix_spectral_radius(q.entries) ==
                doctest::Approx(spectral_radius(g).rho).epsilon(1e-9));
        ++done;
    }
}

TEST_CASE("radius lower bounds hold across an enumerated level") {
    enumerate_graphs(6, nullptr, true, [](const Graph& g) {
        double rho = spectral_radius(g).rho;
        CHECK(rho >= 2.0 * g.size() / g.order() - 1e-9);
        CHECK(rho >= std::sqrt(static_cast<double>(g.max_degree())) - 1e-9);
    });
}
