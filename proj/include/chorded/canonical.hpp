#ifndef CHORDED_CANONICAL_HPP
#define CHORDED_CANONICAL_HPP

#include <string>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

// Canonical labeling: a permutation p (old label -> new label) such that
// permuted(p) is identical for any two isomorphic graphs of the same order.
//
// Connected components are canonized independently by exhaustive
// permutation search (lexicographically minimal column-major
// upper-triangular bit string with prefix pruning), then components are
// sorted by their canonical strings.
// Practical limit is about 24 vertices per component; graphs in
// this project stay far below that.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_copy(const Graph& g);

// Labeled byte serialization (order + upper-triangle bits) of g as-is.
std::string graph_bytes(const Graph& g);

// Byte string equal for two graphs iff they are isomorphic
// (isolated vertices included: forms differ if orders differ).
// Equivalent to graph_bytes(canonical_copy(g)).
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace chorded

#endif
