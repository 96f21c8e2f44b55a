#include "factorkit/graph.hpp"

#include <algorithm>

namespace factorkit {

int degree(const Graph& g, int v) { return g.degree(v); }

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw InputError("minimum degree of the empty graph is undefined");
    int best = kMaxVertices + 1;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return best;
}

VertexSet neighborhood(const Graph& g, VertexSet x) {
    if (x.bits() & ~g.full_mask()) throw InputError("vertex set has members outside the graph");
    Mask out = 0;
    for (Mask m = x.bits(); m; m &= m - 1) out |= g.neighbors(lowest_bit(m));
    return VertexSet(out & ~x.bits());
}

InducedDeletion delete_vertices(const Graph& g, VertexSet s) {
    if (s.bits() & ~g.full_mask()) throw InputError("vertex set has members outside the graph");
    std::vector<int> keep = VertexSet(g.full_mask() & ~s.bits()).members();
    std::vector<int> new_of(size_t(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_of[size_t(keep[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int w : VertexSet(g.neighbors(keep[i]) & ~s.bits()).members())
            if (new_of[size_t(w)] > static_cast<int>(i))
                h.add_edge(static_cast<int>(i), new_of[size_t(w)]);
    return {std::move(h), std::move(keep)};
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw InputError("edge not present");
    Graph h = g;
    h.remove_edge(u, v);
    return h;
}

ComponentDecomposition components_within(const Graph& g, Mask within) {
    within &= g.full_mask();
    ComponentDecomposition d;
    Mask left = within;
    while (left) {
        Mask comp = bit(lowest_bit(left));
        for (;;) {
            Mask grown = comp;
            for (Mask m = comp; m; m &= m - 1) grown |= g.neighbors(lowest_bit(m)) & within;
            if (grown == comp) break;
            comp = grown;
        }
        if (popcount(comp) % 2 == 1) ++d.odd_count;
        d.components.emplace_back(comp);
        left &= ~comp;
    }
    return d;
}

ComponentDecomposition components_of(const Graph& g) { return components_within(g, g.full_mask()); }

bool is_bipartite(const Graph& g) {
    std::vector<int> color(size_t(g.vertex_count()), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[size_t(s)] != -1) continue;
        color[size_t(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbor_list(v)) {
                if (color[size_t(w)] == -1) {
                    color[size_t(w)] = 1 - color[size_t(v)];
                    stack.push_back(w);
                } else if (color[size_t(w)] == color[size_t(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace factorkit
