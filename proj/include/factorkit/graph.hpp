#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "factorkit/errors.hpp"

namespace factorkit {

// Vertices are dense integer labels 0..n-1 with n <= 62 (the graph6 single-byte
// range), so every vertex set fits in one 64-bit mask.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 62;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int v) { return Mask{1} << v; }

// A set of vertex indices backed by a bitmask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int n) {
        return n >= 64 ? VertexSet(~Mask{0}) : VertexSet((Mask{1} << n) - 1);
    }

    bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v & 1); }
    void insert(int v) {
        if (v < 0 || v >= kMaxVertices) throw InputError("vertex index out of range: " + std::to_string(v));
        bits_ |= bit(v);
    }
    void erase(int v) {
        if (v >= 0 && v < 64) bits_ &= ~bit(v);
    }

    int size() const { return popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    Mask bits() const { return bits_; }

    // Smallest member, -1 when empty.
    int min() const { return bits_ == 0 ? -1 : lowest_bit(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size_t(size()));
        for (Mask m = bits_; m; m &= m - 1) out.push_back(lowest_bit(m));
        return out;
    }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

    bool operator==(const VertexSet&) const = default;

private:
    Mask bits_ = 0;
};

// Order on the sorted member sequences: {} < {0} < {0,1} < {0,2} < {1} < ...
// The set holding the first point of divergence as an element is smaller iff
// the other side still has larger elements left.
inline bool lex_less(VertexSet a, VertexSet b) {
    if (a.bits() == b.bits()) return false;
    int d = lowest_bit(a.bits() ^ b.bits());
    if (a.contains(d)) return d + 1 < 64 && (b.bits() >> (d + 1)) != 0;
    return d + 1 >= 64 || (a.bits() >> (d + 1)) == 0;
}

// Simple undirected graph: no loops, no multi-edges, adjacency stored as one
// neighbor mask per vertex (symmetry is maintained by construction).
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw InputError("vertex count must be in 0.." + std::to_string(kMaxVertices));
        adj_.assign(size_t(n), 0);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (Mask m : adj_) twice += popcount(m);
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[size_t(u)] >> v) & 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loops are not allowed");
        adj_[size_t(u)] |= bit(v);
        adj_[size_t(v)] |= bit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[size_t(u)] &= ~bit(v);
        adj_[size_t(v)] &= ~bit(u);
    }

    Mask neighbors(int v) const {
        check_vertex(v);
        return adj_[size_t(v)];
    }

    std::vector<int> neighbor_list(int v) const { return VertexSet(neighbors(v)).members(); }

    Mask full_mask() const { return VertexSet::full(n_).bits(); }

    int degree(int v) const { return popcount(neighbors(v)); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (Mask m = adj_[size_t(u)] >> u >> 1; m; m &= m - 1)
                out.emplace_back(u, u + 1 + lowest_bit(m));
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex index out of range: " + std::to_string(v));
    }

    int n_;
    std::vector<Mask> adj_;
};

// Connected components, each an original-label vertex set ordered by smallest member.
struct ComponentDecomposition {
    std::vector<VertexSet> components;
    int odd_count = 0;
};

// Induced subgraph on the complement of a deleted set, with the map back to
// the original labels (original_label[new index] = old vertex).
struct InducedDeletion {
    Graph graph;
    std::vector<int> original_label;
};

int degree(const Graph& g, int v);
int min_degree(const Graph& g);

// N_G(X): vertices outside X adjacent to some member of X.
VertexSet neighborhood(const Graph& g, VertexSet x);

InducedDeletion delete_vertices(const Graph& g, VertexSet s);

// Copy of g without edge uv; the edge must be present.
Graph delete_edge(const Graph& g, int u, int v);

ComponentDecomposition components_of(const Graph& g);

// Components of the subgraph induced on `within`, reported in original labels.
ComponentDecomposition components_within(const Graph& g, Mask within);

// Proper 2-coloring test.
bool is_bipartite(const Graph& g);

// Every size-k subset of {0..n-1} in ascending lexicographic member order.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Mask m = 0;
        for (int i : idx) m |= bit(i);
        f(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace factorkit
