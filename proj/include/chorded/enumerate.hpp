#ifndef CHORDED_ENUMERATE_HPP
#define CHORDED_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

using GraphFilter = std::function<bool(const Graph&)>;
using GraphSink = std::function<void(const Graph&)>;

// Default edge-count cap for exhaustive enumeration; the environment
// variable CHORDED_SPECTRA_CAP overrides it.
int enumeration_cap();

// Isomorph-free exhaustive enumeration of isolate-free graphs with
// exactly m edges, by canonical augmentation: graphs grow one edge at a
// time (a new edge may introduce up to two new vertices) and a child is
// accepted only when deleting its canonical last edge reproduces the
// parent. Every emitted graph is canonically labeled.
//
// When `hereditary` is true the filter must be subgraph-closed; it is
// then applied to every intermediate level and prunes whole subtrees.
// Otherwise only the final graphs are filtered.
void enumerate_graphs(int m, const GraphFilter& filter, bool hereditary,
                      const GraphSink& emit);

// All unlabeled graphs on exactly n vertices (isolated vertices allowed),
// canonically labeled, grouped by nothing in particular. Levelwise edge
// addition with canonical-form dedup; practical for n <= 8.
std::vector<Graph> graphs_of_order(int n);

// Naive oracle for the enumerator: every labeled graph on up to 2m
// vertices with m edges, deduplicated by canonical form after dropping
// isolated vertices. Exponential; only used in tests at m <= 6.
std::vector<Graph> enumerate_naive(int m);

}  // namespace chorded

#endif
