#pragma once

#include <optional>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

// Exact vertex and edge connectivity via max-flow, exhaustive cut enumeration,
// and the smallest-odd-component selection over fixed-size cuts.

int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);

// A vertex set whose removal leaves more components than the graph had,
// together with what is left.
struct CutWitness {
    VertexSet cut;
    ComponentDecomposition separated;
};

// Every size-`size` vertex cut, ascending lexicographic cut order.
std::vector<CutWitness> enumerate_vertex_cuts(const Graph& g, int size);

// A size-`cut_size` set together with an odd component of minimum order over
// all such sets; ties broken by lexicographic cut, then component.
struct MinOddCutSelection {
    VertexSet cut;
    VertexSet odd_component;
    int order = 0;
};

std::optional<MinOddCutSelection> smallest_odd_cut_component(const Graph& g, int cut_size);

}  // namespace factorkit
