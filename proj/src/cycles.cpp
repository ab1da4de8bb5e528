#include "chorded/cycles.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace chorded {

namespace {

std::vector<std::pair<int, int>> chords_of(const Graph& g, const std::vector<int>& cycle) {
    std::vector<std::pair<int, int>> chords;
    size_t len = cycle.size();
    for (size_t i = 0; i < len; ++i)
        for (size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (!consecutive && g.has_edge(cycle[i], cycle[j]))
                chords.emplace_back(std::min(cycle[i], cycle[j]),
                                    std::max(cycle[i], cycle[j]));
        }
    return chords;
}

CycleWitness make_witness(const Graph& g, std::vector<int> cycle) {
    CycleWitness w;
    w.chords = chords_of(g, cycle);
    w.cycle = std::move(cycle);
    return w;
}

// Two internally vertex-disjoint x-y paths in g (which must contain them in
// a common 2-connected block). Unit-capacity flow on the vertex-split
// digraph; node 2v = in, 2v+1 = out.
std::pair<std::vector<int>, std::vector<int>> two_disjoint_paths(const Graph& g, int x, int y) {
    int n = g.order();
    int nn = 2 * n;
    // cap[u][v] sparse as adjacency map
    std::vector<std::vector<std::pair<int, int>>> arcs(nn);  // (to, arc id)
    std::vector<int> cap;
    auto add_arc = [&](int u, int v, int c) {
        arcs[u].emplace_back(v, static_cast<int>(cap.size()));
        cap.push_back(c);
        arcs[v].emplace_back(u, static_cast<int>(cap.size()));
        cap.push_back(0);
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == x || v == y) ? 2 : 1);
    for (auto [u, v] : g.edges()) {
        add_arc(2 * u + 1, 2 * v, 1);
        add_arc(2 * v + 1, 2 * u, 1);
    }
    int source = 2 * x + 1, sink = 2 * y;
    for (int round = 0; round < 2; ++round) {
        std::vector<int> pred_arc(nn, -1), pred_node(nn, -1);
        std::queue<int> q;
        q.push(source);
        std::vector<char> seen(nn, 0);
        seen[source] = 1;
        while (!q.empty() && !seen[sink]) {
            int u = q.front();
            q.pop();
            for (auto [v, id] : arcs[u]) {
                if (seen[v] || cap[id] == 0) continue;
                seen[v] = 1;
                pred_arc[v] = id;
                pred_node[v] = u;
                q.push(v);
            }
        }
        if (!seen[sink]) throw std::logic_error("two_disjoint_paths: flow < 2");
        for (int v = sink; v != source; v = pred_node[v]) {
            cap[pred_arc[v]] -= 1;
            cap[pred_arc[v] ^ 1] += 1;
        }
    }
    // Decompose: follow saturated out-arcs from x twice.
    std::vector<std::vector<int>> paths;
    for (int round = 0; round < 2; ++round) {
        std::vector<int> path{x};
        int u = source;
        while (u != sink) {
            for (auto& [v, id] : arcs[u]) {
                if ((id & 1) || cap[id] != 0 || cap[id ^ 1] == 0) continue;
                cap[id ^ 1] = 0;  // consume this unit
                // v is an "in" node unless it's the vertex-internal arc
                u = v;
                if ((u & 1) == 0) path.push_back(u / 2);
                break;
            }
        }
        paths.push_back(std::move(path));
    }
    return {paths[0], paths[1]};
}

struct CycleSearch {
    const Graph& g;
    int want_len;        // exact length, or 0 for any >= 3
    int min_chords;
    bool prune;          // distance pruning (detector) vs naive (oracle)
    std::vector<int> path;
    std::vector<char> used;
    std::vector<int> dist;  // BFS distance to root among allowed vertices
    std::optional<CycleWitness> found;

    CycleSearch(const Graph& gr, int len, int s, bool pr)
        : g(gr), want_len(len), min_chords(s), prune(pr), used(gr.order(), 0) {}

    void bfs_from_root(int r) {
        dist.assign(g.order(), -1);
        dist[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            const Bitset& nb = g.neighbors(v);
            for (int w = nb.next(r); w != -1; w = nb.next(w + 1))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
    }

    bool close_cycle() {
        int r = path[0];
        if (static_cast<int>(path.size()) < 3) return false;
        if (!g.has_edge(path.back(), r)) return false;
        if (path[1] > path.back()) return false;  // canonical orientation
        auto chords = chords_of(g, path);
        if (static_cast<int>(chords.size()) < min_chords) return false;
        CycleWitness w;
        w.cycle = path;
        w.chords = std::move(chords);
        found = std::move(w);
        return true;
    }

    bool extend() {
        int r = path[0], v = path.back();
        int len = static_cast<int>(path.size());
        if (want_len > 0 && len == want_len) return close_cycle();
        if (want_len == 0 && close_cycle()) return true;
        const Bitset& nb = g.neighbors(v);
        for (int w = nb.next(r + 1); w != -1; w = nb.next(w + 1)) {
            if (used[w]) continue;
            if (prune && want_len > 0 && dist[w] > want_len - len) continue;
            used[w] = 1;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }

    std::optional<CycleWitness> run() {
        for (int r = 0; r < g.order(); ++r) {
            if (g.degree(r) < 2) continue;
            if (prune) bfs_from_root(r);
            used.assign(g.order(), 0);
            used[r] = 1;
            path.assign(1, r);
            if (extend()) return found;
        }
        return std::nullopt;
    }
};

}  // namespace

bool validate_witness(const Graph& g, const CycleWitness& w, int min_chords) {
    size_t len = w.cycle.size();
    if (len < 3) return false;
    std::vector<char> seen(g.order(), 0);
    for (int v : w.cycle) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < len; ++i)
        if (!g.has_edge(w.cycle[i], w.cycle[(i + 1) % len])) return false;
    auto expected = chords_of(g, w.cycle);
    auto got = w.chords;
    for (auto& [a, b] : got)
        if (a > b) std::swap(a, b);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    return got == expected && static_cast<int>(got.size()) >= min_chords;
}

std::optional<CycleWitness> has_chorded_cycle(const Graph& g) {
    Graph work = g;
    for (auto [x, y] : g.edges()) {
        work.remove_edge(x, y);
        bool common_block = false;
        for (const auto& block : blocks(work).blocks) {
            if (block.size() < 3) continue;
            if (std::binary_search(block.begin(), block.end(), x) &&
                std::binary_search(block.begin(), block.end(), y)) {
                common_block = true;
                break;
            }
        }
        if (common_block) {
            auto [p1, p2] = two_disjoint_paths(work, x, y);
            // p1: x..y, reversed p2 without endpoints: back to x.
            std::vector<int> cycle = p1;
            for (size_t i = p2.size() - 1; i >= 1; --i) {
                if (i == p2.size() - 1) continue;  // y already present
                cycle.push_back(p2[i]);
            }
            work.add_edge(x, y);
            return make_witness(g, std::move(cycle));
        }
        work.add_edge(x, y);
    }
    return std::nullopt;
}

std::optional<CycleWitness> find_s_chorded_k_cycle(const Graph& g, int s, int k) {
    if (s < 1) throw std::invalid_argument("find_s_chorded_k_cycle: s must be >= 1");
    if (k < 4) throw std::invalid_argument("find_s_chorded_k_cycle: k must be >= 4");
    if (s > k * (k - 1) / 2 - k) return std::nullopt;  // more chords than a k-cycle can carry
    if (g.order() < k) return std::nullopt;
    CycleSearch search(g, k, s, true);
    return search.run();
}

std::optional<CycleWitness> has_k_minus_chorded_cycle(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("has_k_minus_chorded_cycle: k must be >= 2");
    return find_s_chorded_k_cycle(g, 2 * k - 3, 2 * k + 1);
}

std::optional<CycleWitness> find_s_chorded_cycle(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("find_s_chorded_cycle: s must be >= 1");
    CycleSearch search(g, 0, s, false);
    return search.run();
}

bool chorded_cycle_oracle(const Graph& g, int s, std::optional<int> len) {
    if (g.order() > 12)
        throw std::invalid_argument("chorded_cycle_oracle: order limit is 12");
    if (s < 0) throw std::invalid_argument("chorded_cycle_oracle: s must be >= 0");
    CycleSearch search(g, len.value_or(0), s, false);
    return search.run().has_value();
}

}  // namespace chorded
