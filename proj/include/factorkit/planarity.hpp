#pragma once

#include <optional>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

// Planarity decided by Kuratowski minor search (a graph is planar iff it has
// neither a K5 nor a K3,3 minor), with branch-set certificates. A second,
// independent oracle tests minors by recursive edge contraction and exists
// purely to cross-validate the first. Both are capped at n <= 12.

inline constexpr int kMaxPlanarityVertices = 12;

enum class MinorTarget { K5, K33 };

// Branch sets of a minor model: disjoint, each connected, one per target
// vertex, with an edge of the host between the sets of every target edge.
// For K33 the sides are branch sets 0..2 and 3..5.
struct MinorEmbedding {
    MinorTarget target = MinorTarget::K5;
    std::vector<VertexSet> branch_sets;
};

struct PlanarityResult {
    bool planar = false;
    std::optional<MinorEmbedding> kuratowski;  // present iff not planar
};

PlanarityResult is_planar(const Graph& g);

std::optional<MinorEmbedding> find_minor(const Graph& g, MinorTarget target);

// Checks every MinorEmbedding invariant against g. Out-of-range vertices are
// an input error; structural violations just return false.
bool verify_minor_embedding(const Graph& g, const MinorEmbedding& emb);

// Lemma probes: planar implies minimum degree <= 5; bipartite planar with
// n >= 3 implies m <= 2n - 4. Both are implications, true when the hypothesis
// fails.
bool check_planar_min_degree(const Graph& g);
bool check_bipartite_planar_bound(const Graph& g);

// Independent second oracle: recursive minor test by edge contraction with a
// direct subgraph check at each step.
bool has_minor_by_contraction(const Graph& g, MinorTarget target);
bool is_planar_by_contraction(const Graph& g);

}  // namespace factorkit
