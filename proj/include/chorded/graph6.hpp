#ifndef CHORDED_GRAPH6_HPP
#define CHORDED_GRAPH6_HPP

#include <string>
#include <string_view>

#include "chorded/graph.hpp"

namespace chorded {

// Standard graph6 text format: 6-bit chunks of the upper triangle in
// column-major order, offset by 63. Orders up to 258047 are supported
// (1- and 4-byte size prefixes).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace chorded

#endif
