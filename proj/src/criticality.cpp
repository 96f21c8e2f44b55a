#include "factorkit/criticality.hpp"

#include <algorithm>

#include "factorkit/connectivity.hpp"
#include "factorkit/matching.hpp"

namespace factorkit {

namespace {

void require_3fc(const Graph& g, const char* who) {
    if (!is_k_factor_critical(g, 3))
        throw InputError(std::string(who) + " requires a 3-factor-critical graph");
}

int component_index(const std::vector<VertexSet>& comps, int v) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (comps[i].contains(v)) return static_cast<int>(i);
    return -1;
}

std::optional<PropertyPCut> property_p_side(const Graph& g, VertexSet component, int inner, int outer) {
    VertexSet cut = neighborhood(g, component);
    if (cut.size() != 4) return std::nullopt;
    if (!cut.contains(outer)) return std::nullopt;
    // Component of G - cut containing the inner endpoint.
    ComponentDecomposition rest = components_within(g, g.full_mask() & ~cut.bits());
    int idx = component_index(rest.components, inner);
    if (idx < 0) return std::nullopt;
    VertexSet odd = rest.components[size_t(idx)];
    if (odd.size() % 2 == 0) return std::nullopt;
    if ((g.neighbors(outer) & odd.bits()) != bit(inner)) return std::nullopt;
    return PropertyPCut{inner, outer, cut, odd};
}

}  // namespace

bool is_k_factor_critical(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 0 || k >= n) throw InputError("k must satisfy 0 <= k < n");
    if ((n - k) % 2 != 0) return false;
    bool ok = true;
    for_each_subset_of_size(n, k, [&](Mask s) {
        if (ok && !has_perfect_matching_within(g, g.full_mask() & ~s)) ok = false;
    });
    return ok;
}

bool is_minimal_k_factor_critical(const Graph& g, int k) {
    if (!is_k_factor_critical(g, k)) return false;
    for (auto [u, v] : g.edges())
        if (is_k_factor_critical(delete_edge(g, u, v), k)) return false;
    return true;
}

bool check_lemma_connectivity(const Graph& g, int k) {
    if (k < 1) throw InputError("connectivity check needs k >= 1");
    if (!is_k_factor_critical(g, k))
        throw InputError("connectivity check requires a k-factor-critical graph");
    return vertex_connectivity(g) >= k && edge_connectivity(g) >= k + 1;
}

bool check_even_components(const Graph& g, VertexSet s) {
    if (s.size() != 3) throw InputError("even-components check needs |S| = 3");
    if (s.bits() & ~g.full_mask()) throw InputError("vertex set has members outside the graph");
    require_3fc(g, "even-components check");
    ComponentDecomposition rest = components_within(g, g.full_mask() & ~s.bits());
    return rest.odd_count == 0;
}

CheckOutcome check_neighborhood_at_least4(const Graph& g, VertexSet h) {
    if (g.vertex_count() < 4) throw InputError("neighborhood check needs order >= 4");
    if (h.bits() & ~g.full_mask()) throw InputError("vertex set has members outside the graph");
    require_3fc(g, "neighborhood check");
    if (h.empty() || h.size() % 2 == 0) return CheckOutcome::not_applicable;
    VertexSet nb = neighborhood(g, h);
    Mask leftover = g.full_mask() & ~h.bits() & ~nb.bits();
    if (leftover == 0) return CheckOutcome::not_applicable;
    ComponentDecomposition rest = components_within(g, g.full_mask() & ~nb.bits());
    if (rest.components.size() <= components_of(g).components.size())
        return CheckOutcome::not_applicable;
    return nb.size() >= 4 ? CheckOutcome::holds : CheckOutcome::fails;
}

DeficiencyStructure find_deficiency_structure(const Graph& g, int u, int v, int k) {
    int n = g.vertex_count();
    if (!g.has_edge(u, v)) throw InputError("uv must be an edge");
    if (k < 0 || k >= n) throw InputError("k must satisfy 0 <= k < n");
    Graph stripped = delete_edge(g, u, v);

    // First k-set (lexicographic) whose removal leaves no perfect matching.
    std::optional<VertexSet> removed;
    for_each_subset_of_size(n, k, [&](Mask s) {
        if (!removed && !has_perfect_matching_within(stripped, stripped.full_mask() & ~s))
            removed = VertexSet(s);
    });
    if (!removed)
        throw ContractViolation(
            "every k-set leaves a perfect matching after deleting uv; the graph was not minimal "
            "k-factor-critical at this edge");

    Mask remainder = stripped.full_mask() & ~removed->bits();
    auto barrier = find_barrier_within(stripped, remainder);
    if (!barrier) throw ContractViolation("barrier extraction disagreed with the matching decision");

    DeficiencyStructure d;
    d.u = u;
    d.v = v;
    d.removed_set = *removed;
    d.barrier = barrier->set;
    d.odd_components = barrier->odd_components;
    if (static_cast<int>(d.odd_components.size()) != d.barrier.size() + 2)
        throw ContractViolation("odd component count is not |barrier| + 2; input was not k-factor-critical");
    d.u_component = component_index(d.odd_components, u);
    d.v_component = component_index(d.odd_components, v);
    if (d.u_component < 0 || d.v_component < 0 || d.u_component == d.v_component)
        throw ContractViolation("edge endpoints are not in two distinct odd components");
    return d;
}

ContractionBipartite build_contraction_bipartite(const Graph& g, const DeficiencyStructure& d) {
    ContractionBipartite h;
    h.left = (d.removed_set | d.barrier).members();
    h.right_size = static_cast<int>(d.odd_components.size());
    h.u_index = d.u_component;
    h.v_index = d.v_component;
    for (std::size_t pos = 0; pos < h.left.size(); ++pos) {
        // The deleted edge uv has both ends inside components, never here.
        Mask nb = g.neighbors(h.left[pos]);
        for (int r = 0; r < h.right_size; ++r)
            if (nb & d.odd_components[size_t(r)].bits())
                h.edges.emplace_back(static_cast<int>(pos), r);
    }
    return h;
}

Graph ContractionBipartite::as_graph() const {
    int l = static_cast<int>(left.size());
    Graph g(l + right_size);
    for (auto [pos, r] : edges) g.add_edge(pos, l + r);
    return g;
}

std::pair<std::optional<PropertyPCut>, std::optional<PropertyPCut>>
extract_property_p_cuts(const Graph& g, const DeficiencyStructure& d) {
    if (d.removed_set.size() != 3) return {std::nullopt, std::nullopt};
    auto u_side = property_p_side(g, d.odd_components[size_t(d.u_component)], d.u, d.v);
    auto v_side = property_p_side(g, d.odd_components[size_t(d.v_component)], d.v, d.u);
    return {u_side, v_side};
}

bool verify_property_p_cut(const Graph& g, const PropertyPCut& p) {
    if ((p.cut.bits() | p.odd_component.bits()) & ~g.full_mask())
        throw InputError("cut references vertices outside the graph");
    if (p.cut.size() != 4) return false;
    if (!p.cut.contains(p.edge_v)) return false;
    if (!p.odd_component.contains(p.edge_u) || p.odd_component.size() % 2 == 0) return false;
    ComponentDecomposition rest = components_within(g, g.full_mask() & ~p.cut.bits());
    int idx = component_index(rest.components, p.edge_u);
    if (idx < 0 || rest.components[size_t(idx)] != p.odd_component) return false;
    return (g.neighbors(p.edge_v) & p.odd_component.bits()) == bit(p.edge_u);
}

namespace {

PartitionRefinement refine(const Graph& g, VertexSet first_cut, VertexSet first_component,
                           VertexSet second_cut, VertexSet second_component) {
    Mask all = g.full_mask();
    for (VertexSet s : {first_cut, first_component, second_cut, second_component})
        if (s.bits() & ~all) throw InputError("vertex set has members outside the graph");
    if (first_cut.bits() & first_component.bits())
        throw InputError("first cut and component overlap");
    if (second_cut.bits() & second_component.bits())
        throw InputError("second cut and component overlap");
    if (first_component.empty() || second_component.empty())
        throw InputError("components must be nonempty");
    if (neighborhood(g, first_component).bits() & ~first_cut.bits())
        throw InputError("first component has neighbors outside the first cut");
    if (neighborhood(g, second_component).bits() & ~second_cut.bits())
        throw InputError("second component has neighbors outside the second cut");
    if (components_within(g, second_component.bits()).components.size() != 1)
        throw InputError("second component must induce a connected subgraph");

    Mask rest1 = all & ~first_cut.bits() & ~first_component.bits();
    Mask rest2 = all & ~second_cut.bits() & ~second_component.bits();

    PartitionRefinement r;
    r.comp_both = VertexSet(first_component.bits() & second_component.bits());
    r.comp2_outside1 = VertexSet(second_component.bits() & rest1);
    r.outside_both = VertexSet(rest1 & rest2);
    r.comp1_outside2 = VertexSet(first_component.bits() & rest2);
    r.cut1_in_comp2 = VertexSet(first_cut.bits() & second_component.bits());
    r.cut1_outside2 = VertexSet(first_cut.bits() & rest2);
    r.cut2_in_comp1 = VertexSet(second_cut.bits() & first_component.bits());
    r.cut2_outside1 = VertexSet(second_cut.bits() & rest1);
    r.cut_overlap = VertexSet(first_cut.bits() & second_cut.bits());

    r.enclosure1_ge5 = r.enclosure1().size() >= 5;
    bool claim2 = true;
    const VertexSet cells[3] = {r.comp2_outside1, r.outside_both, r.comp1_outside2};
    const VertexSet encl[3] = {r.enclosure2(), r.enclosure3(), r.enclosure4()};
    for (int i = 0; i < 3 && claim2; ++i)
        if (encl[i].size() <= 2) claim2 = cells[i].empty();
    r.small_enclosures_empty = claim2;
    r.outside_both_even = r.outside_both.size() % 2 == 0;
    r.cut1_outside2_nonempty = !r.cut1_outside2.empty();
    return r;
}

}  // namespace

PartitionRefinement refine_partition(const Graph& g, VertexSet first_cut, VertexSet first_component,
                                     VertexSet second_cut, VertexSet second_component, int u, int v) {
    if (!first_component.contains(u) || !second_component.contains(u))
        throw InputError("u must lie in both components");
    if (!second_cut.contains(v) || !first_component.contains(v))
        throw InputError("v must lie in the second cut and the first component");
    return refine(g, first_cut, first_component, second_cut, second_component);
}

PartitionRefinement refine_partition(const Graph& g, VertexSet first_cut, VertexSet first_component,
                                     VertexSet second_cut, VertexSet second_component) {
    return refine(g, first_cut, first_component, second_cut, second_component);
}

}  // namespace factorkit
