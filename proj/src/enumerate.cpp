#include "factorkit/enumerate.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "factorkit/canonical.hpp"

namespace factorkit {

namespace {

// One vertex-augmentation level: every graph on t+1 vertices arises by adding
// a vertex with some neighborhood to an induced subgraph on t vertices, so
// extending each canonical t-vertex representative with every neighborhood and
// deduplicating by canonical key is exhaustive.
std::vector<Graph> augment(const std::vector<Graph>& level, int max_degree, int max_edges) {
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    std::vector<std::pair<CanonicalKey, Graph>> out;
    for (const Graph& g : level) {
        int t = g.vertex_count();
        for (Mask nb = 0; nb < (Mask{1} << t); ++nb) {
            int d = popcount(nb);
            if (max_degree >= 0 && d > max_degree) continue;
            if (max_edges >= 0 && g.edge_count() + d > max_edges) continue;
            bool over = false;
            for (Mask m = nb; m && !over; m &= m - 1)
                over = max_degree >= 0 && g.degree(lowest_bit(m)) + 1 > max_degree;
            if (over) continue;
            Graph h(t + 1);
            for (auto [u, v] : g.edges()) h.add_edge(u, v);
            for (Mask m = nb; m; m &= m - 1) h.add_edge(lowest_bit(m), t);
            CanonicalKey key = canonical_key(h);
            if (seen.insert(key).second) out.emplace_back(key, canonical_form(h));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> result;
    result.reserve(out.size());
    for (auto& [key, g] : out) result.push_back(std::move(g));
    return result;
}

std::vector<Graph> generate(int n, int max_degree, int max_edges) {
    std::vector<Graph> level{Graph(1)};
    for (int t = 1; t < n; ++t) level = augment(level, max_degree, max_edges);
    return level;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
    return enumerate_graphs(n, [](const Graph&) { return true; });
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& keep) {
    if (n < 1) throw InputError("enumeration needs n >= 1");
    if (n > kMaxEnumerationVertices)
        throw CapabilityError("built-in enumeration supports n <= " +
                              std::to_string(kMaxEnumerationVertices) +
                              "; ingest an external graph6 stream for larger orders");
    std::vector<Graph> all = generate(n, -1, -1);
    if (!keep) return all;
    std::vector<Graph> out;
    for (Graph& g : all)
        if (keep(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_graphs_capped(int n, int max_degree, int max_edges) {
    if (n < 1) throw InputError("enumeration needs n >= 1");
    if (n > kMaxCanonicalVertices)
        throw CapabilityError("capped generation is limited by the canonical form cap of " +
                              std::to_string(kMaxCanonicalVertices));
    return generate(n, max_degree, max_edges);
}

}  // namespace factorkit
