#include "factorkit/matching.hpp"

#include <algorithm>
#include <numeric>

namespace factorkit {

namespace {

// Augmenting-path search with odd-cycle (blossom) contraction, O(V^3).
struct BlossomSolver {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit BlossomSolver(int n_) : n(n_), adj(size_t(n_)) {}

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(size_t(n), 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting_path(int root) {
        used.assign(size_t(n), 0);
        parent.assign(size_t(n), -1);
        base.resize(size_t(n));
        std::iota(base.begin(), base.end(), 0);
        std::vector<int> queue{root};
        used[root] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // odd cycle: contract the blossom down to the common base
                    int cur_base = lowest_common_base(v, to);
                    in_blossom.assign(size_t(n), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[base[i]]) continue;
                        base[i] = cur_base;
                        if (!used[i]) {
                            used[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int finish) {
        int v = finish;
        while (v != -1) {
            int pv = parent[v];
            int next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    void solve() {
        match.assign(size_t(n), -1);
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            for (int to : adj[v]) {
                if (match[to] == -1) {
                    match[v] = to;
                    match[to] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int finish = find_augmenting_path(v);
            if (finish != -1) augment(finish);
        }
    }
};

Matching solve_on_subset(const Graph& g, Mask within) {
    std::vector<int> verts = VertexSet(within & g.full_mask()).members();
    std::vector<int> pos(size_t(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = int(i);
    BlossomSolver solver(int(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int w : VertexSet(g.neighbors(verts[i]) & within).members())
            if (pos[w] > int(i)) solver.add_edge(int(i), pos[w]);
    solver.solve();
    Matching m;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int to = solver.match[i];
        if (to > int(i)) m.pairs.emplace_back(verts[i], verts[to]);
    }
    return m;
}

BarrierCertificate certify(const Graph& g, Mask within, Mask barrier_bits) {
    BarrierCertificate cert;
    cert.set = VertexSet(barrier_bits);
    ComponentDecomposition rest = components_within(g, within & ~barrier_bits);
    for (const VertexSet& c : rest.components)
        if (c.size() % 2 == 1) cert.odd_components.push_back(c);
    cert.deficiency = rest.odd_count - popcount(barrier_bits);
    return cert;
}

// Vertices missed by some maximum matching form D; A = N(D) \ D is a barrier
// of maximum deficiency (the set the alternating forests leave behind).
BarrierCertificate forest_barrier(const Graph& g, Mask within) {
    int nu = solve_on_subset(g, within).size();
    Mask d = 0;
    for (Mask m = within; m; m &= m - 1) {
        int v = lowest_bit(m);
        if (solve_on_subset(g, within & ~bit(v)).size() == nu) d |= bit(v);
    }
    Mask a = 0;
    for (Mask m = d; m; m &= m - 1) a |= g.neighbors(lowest_bit(m)) & within;
    a &= ~d;
    return certify(g, within, a);
}

}  // namespace

Matching max_matching(const Graph& g) { return solve_on_subset(g, g.full_mask()); }

Matching max_matching_within(const Graph& g, Mask within) { return solve_on_subset(g, within); }

int max_matching_size(const Graph& g) { return max_matching(g).size(); }

bool has_perfect_matching_within(const Graph& g, Mask within) {
    int k = popcount(within & g.full_mask());
    return k % 2 == 0 && solve_on_subset(g, within).size() * 2 == k;
}

bool has_perfect_matching(const Graph& g) { return has_perfect_matching_within(g, g.full_mask()); }

std::optional<BarrierCertificate> find_barrier_within(const Graph& g, Mask within) {
    within &= g.full_mask();
    if (has_perfect_matching_within(g, within)) return std::nullopt;
    int k = popcount(within);
    if (k <= 12) {
        // Exhaustive: lexicographically smallest set of maximum deficiency.
        std::vector<int> verts = VertexSet(within).members();
        int best_def = -1;
        VertexSet best;
        for (Mask sub = 0; sub < (Mask{1} << k); ++sub) {
            Mask s = 0;
            for (Mask m = sub; m; m &= m - 1) s |= bit(verts[lowest_bit(m)]);
            int def = components_within(g, within & ~s).odd_count - popcount(s);
            if (def > best_def || (def == best_def && lex_less(VertexSet(s), best))) {
                best_def = def;
                best = VertexSet(s);
            }
        }
        return certify(g, within, best.bits());
    }
    return forest_barrier(g, within);
}

std::optional<BarrierCertificate> find_barrier(const Graph& g) {
    return find_barrier_within(g, g.full_mask());
}

std::optional<BarrierCertificate> structural_barrier(const Graph& g) {
    if (has_perfect_matching(g)) return std::nullopt;
    return forest_barrier(g, g.full_mask());
}

bool tutte_cross_check(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) throw CapabilityError("tutte cross-check enumerates subsets, n <= 12 only");
    bool matched = has_perfect_matching(g);
    bool tutte = true;
    for (Mask s = 0; s < (Mask{1} << n) && tutte; ++s)
        tutte = components_within(g, g.full_mask() & ~s).odd_count <= popcount(s);
    return matched == tutte;
}

}  // namespace factorkit
