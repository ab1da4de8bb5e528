#ifndef CHORDED_CYCLES_HPP
#define CHORDED_CYCLES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "chorded/graph.hpp"

namespace chorded {

struct CycleWitness {
    std::vector<int> cycle;                      // c0, ..., c_{L-1}, L >= 3
    std::vector<std::pair<int, int>> chords;     // all chords of the cycle
};

// True iff w is a valid cycle of g whose chord list is exactly the set of
// non-cycle edges of g joining cycle vertices, with at least min_chords.
bool validate_witness(const Graph& g, const CycleWitness& w, int min_chords);

// Cycle with at least one chord, if any. For each edge xy the search
// deletes it and asks for a cycle through x and y in the rest (a common
// block of size >= 3); two internally disjoint x-y paths are then pulled
// out by unit-capacity augmentation, and xy is the chord.
std::optional<CycleWitness> has_chorded_cycle(const Graph& g);

// A k-cycle carrying at least s chords, if any: backtracking enumeration
// of k-cycles rooted at their smallest vertex (second vertex < last
// vertex, so each cycle appears once), pruned by a BFS distance bound
// back to the root and by the maximum possible chord count.
std::optional<CycleWitness> find_s_chorded_k_cycle(const Graph& g, int s, int k);

// (2k-3)-chorded (2k+1)-cycle, k >= 2.
std::optional<CycleWitness> has_k_minus_chorded_cycle(const Graph& g, int k);

// Any cycle with at least s chords, s >= 1, any length. Cycle enumeration
// with early exit; no order cap, intended for sparse or small graphs.
std::optional<CycleWitness> find_s_chorded_cycle(const Graph& g, int s);

// Independent brute-force oracle: enumerate every simple cycle (of length
// len if given) up to rotation/reflection, no pruning beyond canonicity,
// and report whether one has at least s chords. Practical for n <= 12.
bool chorded_cycle_oracle(const Graph& g, int s, std::optional<int> len = std::nullopt);

}  // namespace chorded

#endif
