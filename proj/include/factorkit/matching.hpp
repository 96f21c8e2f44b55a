#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

// Maximum matching (blossom method), perfect matching decision and Tutte
// barrier extraction.

struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
};

// Witness that a graph has no perfect matching: a set S with
// o(G-S) >= |S| + 1. Lists exactly the odd components of G-S.
struct BarrierCertificate {
    VertexSet set;
    std::vector<VertexSet> odd_components;
    int deficiency = 0;  // o(G-S) - |S|, always >= 1
};

Matching max_matching(const Graph& g);
int max_matching_size(const Graph& g);

// Matching machinery on the subgraph induced by `within`, original labels.
Matching max_matching_within(const Graph& g, Mask within);
bool has_perfect_matching_within(const Graph& g, Mask within);

bool has_perfect_matching(const Graph& g);

// Absent iff g has a perfect matching. Otherwise the lexicographically
// smallest vertex set of maximum deficiency (exhaustive for n <= 12; the
// structural barrier from the alternating-forest decomposition beyond that).
std::optional<BarrierCertificate> find_barrier(const Graph& g);
std::optional<BarrierCertificate> find_barrier_within(const Graph& g, Mask within);

// The barrier left by failed augmenting-path searches: A = N(D) \ D where D is
// the set of vertices missed by some maximum matching. Absent iff g has a
// perfect matching.
std::optional<BarrierCertificate> structural_barrier(const Graph& g);

// True iff the matching-based perfect-matching decision agrees with the
// exhaustive o(G-S) <= |S| sweep over every subset S. Capped at n <= 12.
bool tutte_cross_check(const Graph& g);

}  // namespace factorkit
