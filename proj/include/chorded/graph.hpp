#ifndef CHORDED_GRAPH_HPP
#define CHORDED_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace chorded {

// Dynamic bitset used for adjacency rows. One 64-bit word covers the
// common case (n <= 64); larger graphs spill into more words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const;
    bool any() const;

    // First set bit at index >= from, or -1.
    int next(int from) const;

    // |this AND other|, for fast common-neighbor counts.
    int count_and(const Bitset& other) const;

    bool operator==(const Bitset&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1, stored as one adjacency
// bitset per vertex. Symmetry and loop-freeness are maintained by the
// mutators; all higher-level operations treat graphs as immutable values.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    long long size() const { return m_; }  // edge count

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return adj_[v].count(); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    std::vector<std::pair<int, int>> edges() const;

    int min_degree() const;
    int max_degree() const;
    bool is_isolate_free() const;

    std::vector<std::vector<int>> components() const;
    bool is_connected() const;

    // Subgraph induced by verts, relabeled to 0..|verts|-1 in the given order.
    Graph induced(const std::vector<int>& verts) const;

    // Relabeled copy: vertex i of this becomes perm[i].
    Graph permuted(const std::vector<int>& perm) const;

    // Copy without isolated vertices (remaining vertices keep relative order).
    Graph without_isolated() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Join, disjoint union and repeated disjoint union. disjoint_union
// relabels H's vertices after G's; join additionally adds all cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph copies(int k, const Graph& g);

// Maximal induced subgraph with minimum degree >= k, found by peeling.
// Returned on the same vertex set with peeled vertices isolated? No:
// returned as the induced subgraph on the surviving vertices (original order).
Graph k_core(const Graph& g, int k);

// Vertex sets of the k-core inside g, in increasing order.
std::vector<int> k_core_vertices(const Graph& g, int k);

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // vertex sets, each sorted
    std::vector<int> cut_vertices;         // sorted
};

// Biconnected components (blocks). Every edge lies in exactly one block;
// bridge edges form 2-vertex blocks. Isolated vertices form no block.
BlockDecomposition blocks(const Graph& g);

}  // namespace chorded

#endif
