#pragma once

#include <string>
#include <string_view>

#include "factorkit/graph.hpp"

namespace factorkit {

// graph6 line codec, single-byte size form (n <= 62). Bit order is the upper
// triangle read column by column: for j = 1..n-1, for i = 0..j-1, bit x(i,j),
// packed big-endian into 6-bit groups, each group + 63 as one printable byte.

Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace factorkit
