#include "factorkit/connectivity.hpp"

#include <algorithm>
#include <vector>

namespace factorkit {

namespace {

// Small dense max-flow (BFS augmentation); capacities fit easily in int.
struct FlowNet {
    int n;
    std::vector<std::vector<int>> cap;

    explicit FlowNet(int n_) : n(n_), cap(size_t(n_), std::vector<int>(size_t(n_), 0)) {}

    void add(int u, int v, int c) { cap[u][v] += c; }

    int max_flow(int s, int t) {
        int flow = 0;
        std::vector<int> prev(static_cast<std::size_t>(n));
        for (;;) {
            std::fill(prev.begin(), prev.end(), -1);
            prev[s] = s;
            std::vector<int> queue{s};
            for (std::size_t qi = 0; qi < queue.size() && prev[t] == -1; ++qi) {
                int v = queue[qi];
                for (int w = 0; w < n; ++w) {
                    if (prev[w] == -1 && cap[v][w] > 0) {
                        prev[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            if (prev[t] == -1) return flow;
            int push = 1 << 30;
            for (int v = t; v != s; v = prev[v]) push = std::min(push, cap[prev[v]][v]);
            for (int v = t; v != s; v = prev[v]) {
                cap[prev[v]][v] -= push;
                cap[v][prev[v]] += push;
            }
            flow += push;
        }
    }
};

// Internally disjoint s-t paths for nonadjacent s, t: split each other vertex
// into an in/out pair of capacity 1.
int vertex_flow(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    const int inf = 2 * n + 4;
    FlowNet net(2 * n);
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v) net.add(vin(v), vout(v), v == s || v == t ? inf : 1);
    for (auto [u, v] : g.edges()) {
        net.add(vout(u), vin(v), inf);
        net.add(vout(v), vin(u), inf);
    }
    return net.max_flow(vout(s), vin(t));
}

int edge_flow(const Graph& g, int s, int t) {
    FlowNet net(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        net.add(u, v, 1);
        net.add(v, u, 1);
    }
    return net.max_flow(s, t);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    int best = n - 1;  // complete graph value; also an upper bound
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s, t));
    return best;
}

int edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    int best = n * n;
    for (int t = 1; t < n; ++t) best = std::min(best, edge_flow(g, 0, t));
    return best;
}

std::vector<CutWitness> enumerate_vertex_cuts(const Graph& g, int size) {
    std::vector<CutWitness> out;
    int base_components = int(components_of(g).components.size());
    for_each_subset_of_size(g.vertex_count(), size, [&](Mask s) {
        ComponentDecomposition rest = components_within(g, g.full_mask() & ~s);
        if (int(rest.components.size()) > base_components)
            out.push_back({VertexSet(s), std::move(rest)});
    });
    return out;
}

std::optional<MinOddCutSelection> smallest_odd_cut_component(const Graph& g, int cut_size) {
    // Ranges over every size subset leaving at least one odd component, so it
    // stays total on graphs like K5 where no subset of the size is a strict
    // cut; a strict cut with an odd component always beats the loose extras.
    std::optional<MinOddCutSelection> best;
    for_each_subset_of_size(g.vertex_count(), cut_size, [&](Mask s) {
        ComponentDecomposition rest = components_within(g, g.full_mask() & ~s);
        for (const VertexSet& comp : rest.components) {
            if (comp.size() % 2 == 0) continue;
            if (best && comp.size() > best->order) continue;
            if (best && comp.size() == best->order &&
                (best->cut == VertexSet(s) ? !lex_less(comp, best->odd_component)
                                           : !lex_less(VertexSet(s), best->cut)))
                continue;
            best = MinOddCutSelection{VertexSet(s), comp, comp.size()};
        }
    });
    return best;
}

}  // namespace factorkit
