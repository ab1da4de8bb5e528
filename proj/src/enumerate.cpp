#include "chorded/enumerate.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "chorded/canonical.hpp"

namespace chorded {

int enumeration_cap() {
    if (const char* env = std::getenv("CHORDED_SPECTRA_CAP")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return 12;
}

namespace {

// Canonical last edge of a canonically labeled graph: the edge whose bit
// comes last in column-major order, i.e. max (j, i) with i < j.
std::pair<int, int> canonical_last_edge(const Graph& g) {
    for (int j = g.order() - 1; j >= 1; --j)
        for (int i = j - 1; i >= 0; --i)
            if (g.has_edge(i, j)) return {i, j};
    throw std::logic_error("canonical_last_edge: graph has no edges");
}

// All single-edge augmentations of p (new edge may bring 0..2 new vertices).
template <typename Fn>
void for_each_child(const Graph& p, Fn&& fn) {
    int n = p.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (p.has_edge(u, v)) continue;
            Graph c = p;
            c.add_edge(u, v);
            fn(c);
        }
    for (int u = 0; u < n; ++u) {
        Graph c = disjoint_union(p, Graph(1));
        c.add_edge(u, n);
        fn(c);
    }
    {
        Graph k2(2);
        k2.add_edge(0, 1);
        fn(disjoint_union(p, k2));
    }
}

}  // namespace

void enumerate_graphs(int m, const GraphFilter& filter, bool hereditary,
                      const GraphSink& emit) {
    if (m < 0) throw std::invalid_argument("enumerate_graphs: negative m");
    if (m > enumeration_cap())
        throw std::invalid_argument("enumerate_graphs: m exceeds enumeration cap " +
                                    std::to_string(enumeration_cap()));
    auto passes = [&](const Graph& g) { return !filter || filter(g); };
    if (m == 0) {
        Graph empty(0);
        if (passes(empty)) emit(empty);
        return;
    }
    Graph k2(2);
    k2.add_edge(0, 1);
    if (hereditary && !passes(k2)) return;
    std::vector<Graph> level{k2};
    for (int e = 1; e < m; ++e) {
        std::vector<Graph> next;
        for (const Graph& parent : level) {
            std::string parent_form = graph_bytes(parent);
            std::unordered_set<std::string> seen;
            for_each_child(parent, [&](const Graph& child) {
                if (hereditary && !passes(child)) return;
                Graph canon = canonical_copy(child);
                std::string form = graph_bytes(canon);
                if (seen.contains(form)) return;
                auto [i, j] = canonical_last_edge(canon);
                Graph back = canon;
                back.remove_edge(i, j);
                if (canonical_form(back.without_isolated()) != parent_form) return;
                seen.insert(std::move(form));
                next.push_back(std::move(canon));
            });
        }
        level = std::move(next);
    }
    for (const Graph& g : level)
        if (hereditary || passes(g)) emit(g);
}

std::vector<Graph> graphs_of_order(int n) {
    if (n < 0) throw std::invalid_argument("graphs_of_order: negative n");
    if (n > 8) throw std::invalid_argument("graphs_of_order: practical limit is 8");
    std::vector<Graph> all;
    std::vector<Graph> level{Graph(n)};
    all.push_back(level[0]);
    int max_edges = n * (n - 1) / 2;
    for (int e = 0; e < max_edges; ++e) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& g : level) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    Graph c = g;
                    c.add_edge(u, v);
                    Graph canon = canonical_copy(c);
                    std::string form = graph_bytes(canon);
                    if (seen.insert(std::move(form)).second)
                        next.push_back(std::move(canon));
                }
        }
        for (const Graph& g : next) all.push_back(g);
        level = std::move(next);
    }
    return all;
}

std::vector<Graph> enumerate_naive(int m) {
    if (m > 7) throw std::invalid_argument("enumerate_naive: practical limit is 7");
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    std::vector<Graph> level;
    {
        Graph start(0);
        level.push_back(start);
        if (m == 0) return {start};
    }
    // Unrestricted levelwise growth with global dedup and no parent rule:
    // slower and logically independent of the augmentation acceptance test.
    for (int e = 0; e < m; ++e) {
        std::vector<Graph> next;
        std::unordered_set<std::string> level_seen;
        for (const Graph& g : level) {
            for_each_child(g, [&](const Graph& child) {
                Graph canon = canonical_copy(child);
                std::string form = graph_bytes(canon);
                if (level_seen.insert(std::move(form)).second)
                    next.push_back(std::move(canon));
            });
        }
        level = std::move(next);
    }
    for (const Graph& g : level)
        if (seen.insert(graph_bytes(g)).second) out.push_back(g);
    return out;
}

}  // namespace chorded
