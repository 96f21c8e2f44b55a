#include "factorkit/canonical.hpp"

#include <algorithm>
#include <array>

namespace factorkit {

namespace {

// Depth-first minimization over vertex orderings. Position t >= 1 contributes
// the "column" of adjacency bits between the new vertex and positions 0..t-1,
// so prefixes of the bit string are decided position by position and branches
// whose prefix already exceeds the best completed value are cut. The best value
// can change while a subtree runs, so each node compares its prefix against the
// current best afresh. Candidates interchangeable with an already tried one
// (equal adjacency to the placed prefix and to the remaining vertices) are
// skipped.
struct Canonizer {
    const Graph& g;
    int n;
    std::array<std::uint32_t, 16> best{};
    std::array<std::uint32_t, 16> cur{};
    std::array<int, 16> cur_perm{};
    std::array<int, 16> best_perm{};
    bool have_best = false;
    Mask used = 0;

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    std::uint32_t column_of(int v, int t) const {
        std::uint32_t col = 0;
        Mask nb = g.neighbors(v);
        for (int i = 0; i < t; ++i)
            col |= static_cast<std::uint32_t>((nb >> cur_perm[size_t(i)]) & 1)
                   << (t - 1 - i);
        return col;
    }

    // cur[1..t-1] against best[1..t-1]: -1 below, 0 equal, +1 above.
    int compare_prefix(int t) const {
        for (int i = 1; i < t; ++i) {
            if (cur[size_t(i)] != best[size_t(i)])
                return cur[size_t(i)] < best[size_t(i)] ? -1 : 1;
        }
        return 0;
    }

    void dfs(int t) {
        int cmp = have_best ? compare_prefix(t) : -1;
        if (cmp > 0) return;
        if (t == n) {
            if (!have_best || cmp < 0) {
                best = cur;
                best_perm = cur_perm;
                have_best = true;
            }
            return;
        }
        struct Cand {
            std::uint32_t col;
            int v;
        };
        std::array<Cand, 16> cands;
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (!(used >> v & 1)) cands[size_t(count++)] = {column_of(v, t), v};
        std::sort(cands.begin(), cands.begin() + count,
                  [](const Cand& a, const Cand& b) { return a.col != b.col ? a.col < b.col : a.v < b.v; });
        for (int ci = 0; ci < count; ++ci) {
            auto [col, v] = cands[size_t(ci)];
            // best[t] is read live: a sibling's subtree may have lowered it.
            if (cmp == 0 && t >= 1 && have_best && col > best[size_t(t)]) break;
            bool twin = false;
            for (int cj = 0; cj < ci && !twin; ++cj) {
                auto [pcol, w] = cands[size_t(cj)];
                if (pcol != col) continue;
                Mask rest = ~used & ~bit(v) & ~bit(w);
                twin = (g.neighbors(v) & rest) == (g.neighbors(w) & rest);
            }
            if (twin) continue;
            cur_perm[size_t(t)] = v;
            if (t >= 1) cur[size_t(t)] = col;
            used |= bit(v);
            dfs(t + 1);
            used &= ~bit(v);
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxCanonicalVertices)
        throw CapabilityError("canonical form supports at most " +
                              std::to_string(kMaxCanonicalVertices) + " vertices");
    if (n == 0) return {};
    Canonizer c(g);
    c.dfs(0);
    return std::vector<int>(c.best_perm.begin(), c.best_perm.begin() + n);
}

Graph canonical_form(const Graph& g) {
    std::vector<int> perm = canonical_labeling(g);
    std::vector<int> pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[size_t(perm[i])] = static_cast<int>(i);
    Graph h(g.vertex_count());
    for (auto [u, v] : g.edges())
        h.add_edge(pos[size_t(u)], pos[size_t(v)]);
    return h;
}

CanonicalKey canonical_key(const Graph& g) {
    Graph c = canonical_form(g);
    CanonicalKey key;
    key.n = static_cast<std::uint8_t>(c.vertex_count());
    int k = 0;
    for (int j = 1; j < c.vertex_count(); ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (!c.has_edge(i, j)) continue;
            if (k < 64)
                key.hi |= std::uint64_t{1} << (63 - k);
            else
                key.lo |= std::uint64_t{1} << (127 - k);
        }
    }
    return key;
}

}  // namespace factorkit
