#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

// Canonical form: the vertex ordering minimizing the column-major upper
// triangle bit string (the graph6 bit order), over all permutations. Capped at
// n <= 12; the minimization is exact, found by branch-and-bound.

inline constexpr int kMaxCanonicalVertices = 12;

// Packed minimal bit string, comparable and hashable. Bits are stored
// most-significant-first so numeric order equals graph6 line order.
struct CanonicalKey {
    std::uint8_t n = 0;
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    bool operator==(const CanonicalKey&) const = default;
    bool operator<(const CanonicalKey& o) const {
        if (n != o.n) return n < o.n;
        if (hi != o.hi) return hi < o.hi;
        return lo < o.lo;
    }
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        std::uint64_t h = k.n;
        h = h * 0x9e3779b97f4a7c15ULL ^ k.hi;
        h = h * 0x9e3779b97f4a7c15ULL ^ k.lo;
        return size_t(h);
    }
};

// Ordering achieving the minimum: labeling[new position] = original vertex.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

}  // namespace factorkit
