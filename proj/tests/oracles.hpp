#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// deliberately naive and share no algorithmic path with the library: matching
// by bitmask recursion, connectivity by subset sweeps, isomorphism by
// permutation search.

#include <algorithm>
#include <numeric>
#include <vector>

#include "factorkit/graph.hpp"

namespace oracles {

using factorkit::Graph;
using factorkit::Mask;
using factorkit::VertexSet;

inline int matching_number_rec(const Graph& g, Mask mask, std::vector<int>& memo) {
    if (mask == 0) return 0;
    int idx = static_cast<int>(mask);
    if (memo[size_t(idx)] >= 0) return memo[size_t(idx)];
    int u = factorkit::lowest_bit(mask);
    int best = matching_number_rec(g, mask & ~factorkit::bit(u), memo);  // u stays unmatched
    for (Mask nb = g.neighbors(u) & mask; nb; nb &= nb - 1) {
        int w = factorkit::lowest_bit(nb);
        best = std::max(best,
                        1 + matching_number_rec(g, mask & ~factorkit::bit(u) & ~factorkit::bit(w), memo));
    }
    memo[size_t(idx)] = best;
    return best;
}

inline int matching_number(const Graph& g) {
    std::vector<int> memo(std::size_t{1} << g.vertex_count(), -1);
    return matching_number_rec(g, g.full_mask(), memo);
}

inline bool perfect_matching(const Graph& g, Mask within) {
    int k = factorkit::popcount(within);
    if (k % 2 != 0) return false;
    std::vector<int> memo(std::size_t{1} << g.vertex_count(), -1);
    return matching_number_rec(g, within, memo) * 2 == k;
}

inline bool perfect_matching(const Graph& g) { return perfect_matching(g, g.full_mask()); }

// Tutte condition o(G-S) <= |S| over every subset.
inline bool tutte_condition(const Graph& g) {
    int n = g.vertex_count();
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        if (factorkit::components_within(g, g.full_mask() & ~s).odd_count > factorkit::popcount(s))
            return false;
    return true;
}

// Maximum o(G-S) - |S| over every subset.
inline int max_deficiency(const Graph& g) {
    int n = g.vertex_count();
    int best = -n;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
        best = std::max(best, factorkit::components_within(g, g.full_mask() & ~s).odd_count -
                                  factorkit::popcount(s));
    return best;
}

inline bool is_kfc(const Graph& g, int k) {
    int n = g.vertex_count();
    if ((n - k) % 2 != 0) return false;
    bool ok = true;
    factorkit::for_each_subset_of_size(n, k, [&](Mask s) {
        if (ok && !perfect_matching(g, g.full_mask() & ~s)) ok = false;
    });
    return ok;
}

inline int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    std::size_t base = factorkit::components_of(g).components.size();
    if (base >= 2) return 0;
    for (int size = 0; size <= n - 2; ++size) {
        bool found = false;
        factorkit::for_each_subset_of_size(n, size, [&](Mask s) {
            if (!found &&
                factorkit::components_within(g, g.full_mask() & ~s).components.size() > base)
                found = true;
        });
        if (found) return size;
    }
    return n - 1;
}

inline int edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    int best = n * n;
    for (Mask a = 1; a < (Mask{1} << (n - 1)); ++a) {  // vertex n-1 always on the b side
        int cross = 0;
        for (Mask m = a; m; m &= m - 1)
            cross += factorkit::popcount(g.neighbors(factorkit::lowest_bit(m)) & ~a);
        best = std::min(best, cross);
    }
    return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = a.has_edge(u, v) ==
                     b.has_edge(perm[size_t(u)], perm[size_t(v)]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Upper-triangle bits minimized over every permutation, by full enumeration.
inline std::uint64_t min_bits_exhaustive(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = 0;
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (g.has_edge(perm[size_t(i)], perm[size_t(j)]))
                    bits |= std::uint64_t{1} << (62 - k);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Named instances.

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

// Pentagonal antiprism plus two apexes; 5-regular planar triangulation.
inline Graph icosahedron() {
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(11, 6 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + i, 6 + (i + 4) % 5);
    }
    return g;
}

// Equator C5 (0..4) plus two apexes (5, 6) joined to every equator vertex.
inline Graph pentagonal_bipyramid() {
    Graph g(7);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5);
        g.add_edge(i, 6);
    }
    return g;
}

inline Graph cube() {
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
    return g;
}

inline Graph two_triangles() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

}  // namespace oracles
