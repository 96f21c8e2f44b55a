#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

// k-factor-criticality, minimality, the lemma probes around 3-factor-critical
// graphs, the deficiency structure of a deleted edge, its contracted bipartite
// graph, Property P cut extraction, and the nine-cell partition refinement.

enum class CheckOutcome { holds, fails, not_applicable };

// True iff removing any k vertices leaves a perfect matching. False outright
// when n and k differ in parity. k = 0 is the plain perfect matching test.
bool is_k_factor_critical(const Graph& g, int k);

// k-factor-critical, and no single edge deletion stays k-factor-critical.
bool is_minimal_k_factor_critical(const Graph& g, int k);

// For a k-factor-critical graph with k >= 1: vertex connectivity >= k and
// edge connectivity >= k + 1. Violated preconditions are an input error.
bool check_lemma_connectivity(const Graph& g, int k);

// For a 3-factor-critical graph and |S| = 3: every component of G - S is even.
bool check_even_components(const Graph& g, VertexSet s);

// For a 3-factor-critical graph with n >= 4 and a subgraph given by its vertex
// set H: when |H| is odd and N(H) is a vertex cut leaving vertices outside
// H and N(H), the neighborhood must have size >= 4. Not applicable otherwise.
CheckOutcome check_neighborhood_at_least4(const Graph& g, VertexSet h);

// The record extracted from a minimal k-factor-critical graph at an edge uv:
// the first k-set whose removal after uv kills all perfect matchings, a
// maximum-deficiency barrier of the remainder, and the odd components it
// leaves, which number exactly |barrier| + 2 with u and v separated.
struct DeficiencyStructure {
    int u = 0;
    int v = 0;
    VertexSet removed_set;                  // the k deleted vertices
    VertexSet barrier;                      // Tutte barrier of G - uv - removed_set
    std::vector<VertexSet> odd_components;  // odd components after also removing the barrier
    int u_component = -1;
    int v_component = -1;
};

DeficiencyStructure find_deficiency_structure(const Graph& g, int u, int v, int k);

// Bipartite contraction: drop the even components, contract each odd component
// to one right-side vertex, keep the removed-set vertices on the left, drop
// edges inside the left side and duplicate edges.
struct ContractionBipartite {
    std::vector<int> left;                          // original labels, ascending
    int right_size = 0;                             // contracted odd components
    std::vector<std::pair<int, int>> edges;         // (left position, right index)
    int u_index = -1;                               // right index of u's component
    int v_index = -1;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int right_degree(int i) const {
        int d = 0;
        for (auto [l, r] : edges) d += r == i;
        return d;
    }
    int left_degree(int pos) const {
        int d = 0;
        for (auto [l, r] : edges) d += l == pos;
        return d;
    }
    // The contraction as a graph: left side 0..|left|-1, right side after it.
    Graph as_graph() const;
};

ContractionBipartite build_contraction_bipartite(const Graph& g, const DeficiencyStructure& d);

// A size-4 cut around the edge endpoint's odd component: contains the opposite
// endpoint, the component of G - cut holding the endpoint is odd, and the only
// edge from the component to the opposite endpoint is uv itself.
struct PropertyPCut {
    int edge_u = 0;  // endpoint inside the odd component
    int edge_v = 0;  // opposite endpoint, a cut member
    VertexSet cut;
    VertexSet odd_component;
};

// The u-side and v-side cuts derived from a deficiency structure, each present
// only when all four conditions hold. Defined for the k = 3 setting; other k
// yield both sides absent.
std::pair<std::optional<PropertyPCut>, std::optional<PropertyPCut>>
extract_property_p_cuts(const Graph& g, const DeficiencyStructure& d);

// Re-verification of the four conditions on a returned value.
bool verify_property_p_cut(const Graph& g, const PropertyPCut& p);

// Nine-cell refinement of two cut decompositions {first_component, first_cut,
// rest} and {second_component, second_cut, rest}. Cells partition the vertex
// set; when both cuts have size 4 the cut-cell counts satisfy
// x1 + x2 + y1 + y2 + 2c = 8.
struct PartitionRefinement {
    // Component cells.
    VertexSet comp_both;          // first_component ∩ second_component
    VertexSet comp2_outside1;     // second_component ∩ rest of first
    VertexSet outside_both;       // rest ∩ rest
    VertexSet comp1_outside2;     // first_component ∩ rest of second
    // Cut cells.
    VertexSet cut1_in_comp2;      // x1
    VertexSet cut1_outside2;      // x2
    VertexSet cut2_in_comp1;      // y1
    VertexSet cut2_outside1;      // y2
    VertexSet cut_overlap;        // c

    int x1() const { return cut1_in_comp2.size(); }
    int x2() const { return cut1_outside2.size(); }
    int y1() const { return cut2_in_comp1.size(); }
    int y2() const { return cut2_outside1.size(); }
    int c() const { return cut_overlap.size(); }
    int count_sum() const { return x1() + x2() + y1() + y2() + 2 * c(); }

    // Enclosing cuts of the four component cells, computed on demand.
    VertexSet enclosure1() const { return cut1_in_comp2 | cut_overlap | cut2_in_comp1; }
    VertexSet enclosure2() const { return cut1_in_comp2 | cut_overlap | cut2_outside1; }
    VertexSet enclosure3() const { return cut2_outside1 | cut_overlap | cut1_outside2; }
    VertexSet enclosure4() const { return cut1_outside2 | cut_overlap | cut2_in_comp1; }

    // Computed claim predicates; never asserted by the operation itself.
    bool enclosure1_ge5 = false;          // |enclosure1| >= 5
    bool small_enclosures_empty = false;  // cells 2..4 with enclosure size <= 2 are empty
    bool outside_both_even = false;       // |outside_both| is even
    bool cut1_outside2_nonempty = false;  // x2 != 0
};

// Endpoint-aware form: requires u in both components and v in second_cut and
// the first component.
PartitionRefinement refine_partition(const Graph& g, VertexSet first_cut, VertexSet first_component,
                                     VertexSet second_cut, VertexSet second_component, int u, int v);

// Arithmetic-only form: validates the two decompositions, no endpoint checks.
PartitionRefinement refine_partition(const Graph& g, VertexSet first_cut, VertexSet first_component,
                                     VertexSet second_cut, VertexSet second_component);

}  // namespace factorkit
