#include "factorkit/planarity.hpp"

#include <array>
#include <unordered_map>
#include <utility>

#include "factorkit/canonical.hpp"

namespace factorkit {

namespace {

struct TargetShape {
    int branches;
    std::vector<std::pair<int, int>> required;
};

TargetShape shape_of(MinorTarget target) {
    TargetShape s;
    if (target == MinorTarget::K5) {
        s.branches = 5;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) s.required.emplace_back(i, j);
    } else {
        s.branches = 6;
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) s.required.emplace_back(i, j);
    }
    return s;
}

Mask closure(const Graph& g, Mask seed, Mask allowed) {
    Mask comp = seed & allowed;
    for (;;) {
        Mask grown = comp;
        for (Mask m = comp; m; m &= m - 1) grown |= g.neighbors(lowest_bit(m)) & allowed;
        if (grown == comp) return comp;
        comp = grown;
    }
}

bool edge_between(const Graph& g, Mask a, Mask b) {
    for (Mask m = a; m; m &= m - 1)
        if (g.neighbors(lowest_bit(m)) & b) return true;
    return false;
}

// Assigns vertices in index order to a branch set or to none, pruning branches
// that can no longer become connected or adjacent through the unprocessed
// suffix. Interchangeable branch sets are opened in fixed order.
struct MinorSearch {
    const Graph& g;
    MinorTarget target;
    TargetShape shape;
    int n;
    std::array<Mask, 6> branch{};
    bool found = false;
    std::array<Mask, 6> result{};

    MinorSearch(const Graph& graph, MinorTarget t) : g(graph), target(t), shape(shape_of(t)), n(graph.vertex_count()) {}

    bool may_open(int b) const {
        if (b == 0) return true;
        if (target == MinorTarget::K33 && b == 3) return branch[0] != 0;
        return branch[size_t(b - 1)] != 0;
    }

    bool feasible(Mask future) const {
        int empties = 0;
        for (int b = 0; b < shape.branches; ++b) {
            Mask bs = branch[size_t(b)];
            if (bs == 0) {
                ++empties;
                continue;
            }
            Mask reach = closure(g, bit(lowest_bit(bs)), bs | future);
            if ((reach & bs) != bs) return false;
        }
        if (empties > popcount(future)) return false;
        for (auto [i, j] : shape.required) {
            Mask a = branch[size_t(i)];
            Mask b = branch[size_t(j)];
            if (a == 0 || b == 0 || edge_between(g, a, b)) continue;
            if (!(closure(g, a, a | b | future) & b)) return false;
        }
        return true;
    }

    void dfs(int idx) {
        if (found) return;
        if (idx == n) {
            if (feasible(0)) {
                found = true;
                result = branch;
            }
            return;
        }
        Mask future = idx + 1 >= n ? 0 : (g.full_mask() >> (idx + 1)) << (idx + 1);
        for (int b = 0; b < shape.branches && !found; ++b) {
            if (branch[size_t(b)] == 0 && !may_open(b)) continue;
            branch[size_t(b)] |= bit(idx);
            if (feasible(future)) dfs(idx + 1);
            branch[size_t(b)] &= ~bit(idx);
        }
        if (!found && feasible(future)) dfs(idx + 1);  // idx stays unused
    }
};

Graph contract_edge(const Graph& g, int u, int v) {
    // Merge v into u, drop loops and duplicate edges, relabel w > v to w - 1.
    int n = g.vertex_count();
    Graph h(n - 1);
    auto relabel = [&](int w) { return w > v ? w - 1 : w; };
    for (auto [a, b] : g.edges()) {
        int x = a == v ? u : a;
        int y = b == v ? u : b;
        if (x == y) continue;
        h.add_edge(relabel(x), relabel(y));
    }
    return h;
}

bool has_subgraph(const Graph& g, MinorTarget target) {
    int n = g.vertex_count();
    if (target == MinorTarget::K5) {
        bool found = false;
        for_each_subset_of_size(n, 5, [&](Mask s) {
            if (found) return;
            bool ok = true;
            for (Mask m = s; m && ok; m &= m - 1) {
                int v = lowest_bit(m);
                ok = (g.neighbors(v) & s & ~bit(v)) == (s & ~bit(v));
            }
            found = ok;
        });
        return found;
    }
    bool found = false;
    for_each_subset_of_size(n, 3, [&](Mask a) {
        if (found) return;
        Mask common = g.full_mask() & ~a;
        for (Mask m = a; m; m &= m - 1) common &= g.neighbors(lowest_bit(m));
        found = popcount(common) >= 3;
    });
    return found;
}

using DcMemo = std::unordered_map<CanonicalKey, bool, CanonicalKeyHash>;

bool dc_search(const Graph& g, MinorTarget target, const TargetShape& shape, DcMemo& memo) {
    if (g.vertex_count() < shape.branches ||
        g.edge_count() < static_cast<int>(shape.required.size()))
        return false;
    CanonicalKey key = canonical_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool hit = has_subgraph(g, target);
    if (!hit) {
        for (auto [u, v] : g.edges()) {
            if (dc_search(contract_edge(g, u, v), target, shape, memo)) {
                hit = true;
                break;
            }
        }
    }
    memo.emplace(key, hit);
    return hit;
}

void check_cap(const Graph& g) {
    if (g.vertex_count() > kMaxPlanarityVertices)
        throw CapabilityError("minor search supports at most " +
                              std::to_string(kMaxPlanarityVertices) + " vertices");
}

}  // namespace

std::optional<MinorEmbedding> find_minor(const Graph& g, MinorTarget target) {
    check_cap(g);
    TargetShape shape = shape_of(target);
    if (g.vertex_count() < shape.branches ||
        g.edge_count() < static_cast<int>(shape.required.size()))
        return std::nullopt;
    MinorSearch search(g, target);
    search.dfs(0);
    if (!search.found) return std::nullopt;
    MinorEmbedding emb;
    emb.target = target;
    for (int b = 0; b < shape.branches; ++b)
        emb.branch_sets.emplace_back(VertexSet(search.result[size_t(b)]));
    return emb;
}

PlanarityResult is_planar(const Graph& g) {
    check_cap(g);
    if (auto k5 = find_minor(g, MinorTarget::K5)) return {false, std::move(k5)};
    if (auto k33 = find_minor(g, MinorTarget::K33)) return {false, std::move(k33)};
    return {true, std::nullopt};
}

bool verify_minor_embedding(const Graph& g, const MinorEmbedding& emb) {
    TargetShape shape = shape_of(emb.target);
    for (const VertexSet& bs : emb.branch_sets)
        if (bs.bits() & ~g.full_mask())
            throw InputError("branch set references vertices outside the graph");
    if (static_cast<int>(emb.branch_sets.size()) != shape.branches) return false;
    Mask seen = 0;
    for (const VertexSet& bs : emb.branch_sets) {
        if (bs.empty() || (bs.bits() & seen)) return false;
        seen |= bs.bits();
        if (closure(g, bit(bs.min()), bs.bits()) != bs.bits()) return false;
    }
    for (auto [i, j] : shape.required)
        if (!edge_between(g, emb.branch_sets[size_t(i)].bits(),
                          emb.branch_sets[size_t(j)].bits()))
            return false;
    return true;
}

bool check_planar_min_degree(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return !is_planar(g).planar || min_degree(g) <= 5;
}

bool check_bipartite_planar_bound(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || !is_bipartite(g) || !is_planar(g).planar) return true;
    return g.edge_count() <= 2 * n - 4;
}

bool has_minor_by_contraction(const Graph& g, MinorTarget target) {
    check_cap(g);
    TargetShape shape = shape_of(target);
    DcMemo memo;
    return dc_search(g, target, shape, memo);
}

bool is_planar_by_contraction(const Graph& g) {
    return !has_minor_by_contraction(g, MinorTarget::K5) &&
           !has_minor_by_contraction(g, MinorTarget::K33);
}

}  // namespace factorkit
