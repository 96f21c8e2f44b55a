#include <doctest.h>

#include <random>
#include <set>

#include "factorkit/enumerate.hpp"
#include "factorkit/matching.hpp"
#include "oracles.hpp"

using namespace factorkit;

namespace {

void check_matching_valid(const Graph& g, const Matching& m) {
    std::set<int> seen;
    for (auto [u, v] : m.pairs) {
        CHECK(g.has_edge(u, v));
        CHECK(seen.insert(u).second);
        CHECK(seen.insert(v).second);
    }
}

}  // namespace

TEST_CASE("max matching pins") {
    CHECK(max_matching(oracles::cycle(4)).size() == 2);
    CHECK(max_matching(oracles::cycle(5)).size() == 2);
    CHECK(max_matching(oracles::petersen()).size() == 5);  // frozen from the bitmask oracle
    CHECK(oracles::matching_number(oracles::petersen()) == 5);
}

TEST_CASE("max matching agrees with the bitmask oracle on every graph up to 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            Matching m = max_matching(g);
            check_matching_valid(g, m);
            CHECK(m.size() == oracles::matching_number(g));
        }
    }
}

TEST_CASE("max matching agrees with the oracle on random graphs up to 10") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 != 0) g.add_edge(i, j);
        CHECK(max_matching(g).size() == oracles::matching_number(g));
    }
}

TEST_CASE("perfect matching decision") {
    CHECK(has_perfect_matching(oracles::complete(4)));
    CHECK_FALSE(has_perfect_matching(oracles::star(3)));
    CHECK(has_perfect_matching(oracles::cycle(6)));
    CHECK_FALSE(has_perfect_matching(oracles::cycle(5)));  // odd order
}

TEST_CASE("barrier pins") {
    auto star_barrier = find_barrier(oracles::star(3));
    REQUIRE(star_barrier.has_value());
    CHECK(star_barrier->set == VertexSet{0});
    CHECK(star_barrier->odd_components.size() == 3);
    CHECK(star_barrier->deficiency == 2);

    auto c5_barrier = find_barrier(oracles::cycle(5));
    REQUIRE(c5_barrier.has_value());
    CHECK(c5_barrier->set.empty());
    CHECK(c5_barrier->odd_components.size() == 1);
    CHECK(c5_barrier->deficiency == 1);

    auto tt = find_barrier(oracles::two_triangles());
    REQUIRE(tt.has_value());
    CHECK(tt->set.empty());
    CHECK(tt->odd_components.size() == 2);
    CHECK(tt->deficiency == 2);

    CHECK_FALSE(find_barrier(oracles::complete(4)).has_value());
}

TEST_CASE("barrier properties over every graph up to 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            auto barrier = find_barrier(g);
            CHECK(barrier.has_value() == !has_perfect_matching(g));
            CHECK(has_perfect_matching(g) == oracles::tutte_condition(g));
            if (!barrier) continue;
            ComponentDecomposition rest = components_within(g, g.full_mask() & ~barrier->set.bits());
            CHECK(rest.odd_count == static_cast<int>(barrier->odd_components.size()));
            CHECK(rest.odd_count >= barrier->set.size() + 1);
            CHECK(barrier->deficiency == rest.odd_count - barrier->set.size());
            // maximum deficiency, and the structural barrier matches it
            CHECK(barrier->deficiency == oracles::max_deficiency(g));
            auto structural = structural_barrier(g);
            REQUIRE(structural.has_value());
            CHECK(structural->deficiency == barrier->deficiency);
            if (n % 2 == 0) {
                CHECK(barrier->deficiency >= 2);
                CHECK(barrier->deficiency % 2 == 0);
                // parity step: o(G-S) and |S| agree mod 2 on even order
                CHECK(rest.odd_count % 2 == barrier->set.size() % 2);
            }
        }
    }
}

TEST_CASE("barrier is the lexicographically smallest maximum-deficiency set") {
    for (const Graph& g : enumerate_graphs(6)) {
        auto barrier = find_barrier(g);
        if (!barrier) continue;
        int best = oracles::max_deficiency(g);
        for (Mask s = 0; s < (Mask{1} << 6); ++s) {
            int def = components_within(g, g.full_mask() & ~s).odd_count - popcount(s);
            if (def == best) CHECK_FALSE(lex_less(VertexSet(s), barrier->set));
        }
    }
}

TEST_CASE("tutte cross check") {
    CHECK(tutte_cross_check(oracles::complete(4)));
    CHECK(tutte_cross_check(oracles::star(3)));
    for (const Graph& g : enumerate_graphs(6)) CHECK(tutte_cross_check(g));
    CHECK_THROWS_AS(tutte_cross_check(Graph(13)), CapabilityError);
}
