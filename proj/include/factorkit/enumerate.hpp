#pragma once

#include <functional>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

// Isomorph-free exhaustive generation: exactly one representative per
// isomorphism class of simple graphs on n vertices, each in canonical form,
// sorted by canonical graph6 string. Built-in generation is capped at n <= 8;
// larger orders are meant to be ingested as external graph6 streams.

inline constexpr int kMaxEnumerationVertices = 8;

std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& keep);

// Building block behind the enumerator: isomorph-free generation under
// hereditary caps (maximum degree, maximum edge count), usable past the public
// cap. Serves test streams; max_degree < 0 or max_edges < 0 means no cap.
std::vector<Graph> enumerate_graphs_capped(int n, int max_degree, int max_edges);

}  // namespace factorkit
