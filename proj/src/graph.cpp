#include "chorded/graph.hpp"

#include <algorithm>
#include <bit>

namespace chorded {

int Bitset::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool Bitset::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

int Bitset::next(int from) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    std::uint64_t w = words_[wi] >> (from & 63);
    if (w) return from + std::countr_zero(w);
    for (wi++; wi < static_cast<int>(words_.size()); ++wi)
        if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
    return -1;
}

int Bitset::count_and(const Bitset& other) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop edge");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_isolate_free() const {
    for (int v = 0; v < n_; ++v)
        if (!adj_[v].any()) return false;
    return true;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.assign(1, s);
        std::vector<int> comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w = adj_[v].next(0); w != -1; w = adj_[v].next(w + 1))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    return components().size() == 1;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permuted: wrong permutation size");
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph Graph::without_isolated() const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (adj_[v].any()) keep.push_back(v);
    return induced(keep);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

Graph copies(int k, const Graph& g) {
    if (k < 0) throw std::invalid_argument("copies: negative count");
    Graph out(0);
    for (int i = 0; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

std::vector<int> k_core_vertices(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_core: negative k");
    std::vector<char> alive(g.order(), 1);
    std::vector<int> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.order(); ++v) {
            if (!alive[v] || deg[v] >= k) continue;
            alive[v] = 0;
            changed = true;
            const Bitset& nb = g.neighbors(v);
            for (int w = nb.next(0); w != -1; w = nb.next(w + 1))
                if (alive[w]) --deg[w];
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (alive[v]) out.push_back(v);
    return out;
}

Graph k_core(const Graph& g, int k) { return g.induced(k_core_vertices(g, k)); }

namespace {

// Iterative Hopcroft-Tarjan. Emits each block as a set of edges on the
// edge stack; cut vertices are articulation points.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    std::vector<char> is_cut;
    int timer = 0;

    explicit BlockFinder(const Graph& gr)
        : g(gr), disc(gr.order(), -1), low(gr.order(), 0),
          parent(gr.order(), -1), is_cut(gr.order(), 0) {}

    void pop_block(int u, int v) {
        std::vector<int> verts;
        auto add = [&verts](int x) {
            if (std::find(verts.begin(), verts.end(), x) == verts.end())
                verts.push_back(x);
        };
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            add(a);
            add(b);
            if (a == u && b == v) break;
        }
        std::sort(verts.begin(), verts.end());
        blocks.push_back(std::move(verts));
    }

    void dfs(int root) {
        struct Frame {
            int v;
            int next;
        };
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            int w = g.neighbors(v).next(next);
            if (w == -1) {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) {
                        if (p != root) is_cut[p] = 1;
                        pop_block(p, v);
                    }
                    if (p == root && parent[v] == root) ++root_children;
                }
                continue;
            }
            next = w + 1;
            if (disc[w] == -1) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                edge_stack.emplace_back(v, w);
                stack.push_back({w, 0});
            } else if (w != parent[v] && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.order(); ++v)
        if (bf.disc[v] == -1 && g.degree(v) > 0) bf.dfs(v);
    BlockDecomposition out;
    out.blocks = std::move(bf.blocks);
    for (int v = 0; v < g.order(); ++v)
        if (bf.is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

}  // namespace chorded
