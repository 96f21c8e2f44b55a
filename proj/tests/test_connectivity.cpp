#include <doctest.h>

#include "factorkit/connectivity.hpp"
#include "factorkit/criticality.hpp"
#include "factorkit/enumerate.hpp"
#include "oracles.hpp"

using namespace factorkit;

TEST_CASE("connectivity pins") {
    CHECK(vertex_connectivity(oracles::complete(4)) == 3);
    CHECK(vertex_connectivity(oracles::cycle(5)) == 2);
    CHECK(vertex_connectivity(oracles::petersen()) == 3);  // frozen from the subset oracle
    CHECK(oracles::vertex_connectivity(oracles::petersen()) == 3);

    CHECK(edge_connectivity(oracles::cycle(5)) == 2);
    CHECK(edge_connectivity(oracles::complete(4)) == 3);
    Graph bridge = oracles::two_triangles();
    bridge.add_edge(2, 3);
    CHECK(edge_connectivity(bridge) == 1);
}

TEST_CASE("connectivity agrees with subset oracles on every graph up to 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            int kappa = vertex_connectivity(g);
            int lambda = edge_connectivity(g);
            CHECK(kappa == oracles::vertex_connectivity(g));
            CHECK(lambda == oracles::edge_connectivity(g));
            if (n >= 1) {
                int delta = n == 0 ? 0 : min_degree(g);
                CHECK(kappa <= lambda);
                CHECK(lambda <= delta);
            }
        }
    }
}

TEST_CASE("vertex cut enumeration") {
    auto c4_cuts = enumerate_vertex_cuts(oracles::cycle(4), 2);
    REQUIRE(c4_cuts.size() == 2);
    CHECK(c4_cuts[0].cut == VertexSet{0, 2});
    CHECK(c4_cuts[1].cut == VertexSet{1, 3});

    CHECK(enumerate_vertex_cuts(oracles::complete(4), 2).empty());

    // every nonadjacent pair of C6 disconnects it; frozen by direct count
    auto c6_cuts = enumerate_vertex_cuts(oracles::cycle(6), 2);
    CHECK(c6_cuts.size() == 9);
    int nonadjacent = 0;
    Graph c6 = oracles::cycle(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) nonadjacent += !c6.has_edge(i, j);
    CHECK(nonadjacent == 9);

    for (const CutWitness& w : c6_cuts) {
        CHECK(w.separated.components.size() >= 2);
        Mask all = 0;
        for (const VertexSet& c : w.separated.components) all |= c.bits();
        CHECK(all == (c6.full_mask() & ~w.cut.bits()));
    }
}

TEST_CASE("a set leaving one component is not a cut") {
    // removing 4 of K5 leaves a single vertex: no cuts of size 4
    CHECK(enumerate_vertex_cuts(oracles::complete(5), 4).empty());
    // disconnected graphs: the cut must increase the component count
    Graph tt = oracles::two_triangles();
    CHECK(enumerate_vertex_cuts(tt, 0).empty());
    auto cuts1 = enumerate_vertex_cuts(tt, 1);
    CHECK(cuts1.empty());  // deleting one triangle vertex leaves K2 + triangle, still 2 comps
}

TEST_CASE("smallest odd cut component") {
    auto c7 = smallest_odd_cut_component(oracles::cycle(7), 2);
    REQUIRE(c7.has_value());
    CHECK(c7->order == 1);
    CHECK(c7->cut == VertexSet{0, 2});
    CHECK(c7->odd_component == VertexSet{1});

    // K5 has no strict 4-cut, but every 4-subset leaves an odd singleton
    auto k5 = smallest_odd_cut_component(oracles::complete(5), 4);
    REQUIRE(k5.has_value());
    CHECK(k5->order == 1);
    CHECK(k5->cut == VertexSet{0, 1, 2, 3});
    CHECK(k5->odd_component == VertexSet{4});

    auto c6 = smallest_odd_cut_component(oracles::cycle(6), 2);
    REQUIRE(c6.has_value());
    CHECK(c6->order == 1);
    CHECK(c6->cut == VertexSet{0, 2});

    // C4 minus an antipodal pair leaves two odd singletons
    auto c4 = smallest_odd_cut_component(oracles::cycle(4), 2);
    REQUIRE(c4.has_value());
    CHECK(c4->order == 1);
    CHECK(c4->cut == VertexSet{0, 2});
    CHECK(c4->odd_component == VertexSet{1});
    // C6 minus one vertex is a single odd path, order 5 under the loose reading
    auto c6one = smallest_odd_cut_component(oracles::cycle(6), 1);
    REQUIRE(c6one.has_value());
    CHECK(c6one->order == 5);
    // the empty cut leaves one even component: nothing odd to select
    CHECK_FALSE(smallest_odd_cut_component(oracles::cycle(6), 0).has_value());
}

TEST_CASE("smallest odd cut selection is minimal by rescan") {
    for (const Graph& g : enumerate_graphs(6)) {
        for (int size = 1; size <= 3; ++size) {
            auto sel = smallest_odd_cut_component(g, size);
            int best = 1 << 20;
            for_each_subset_of_size(6, size, [&](Mask s) {
                for (const VertexSet& c : components_within(g, g.full_mask() & ~s).components)
                    if (c.size() % 2 == 1 && c.size() < best) best = c.size();
            });
            if (best == 1 << 20) {
                CHECK_FALSE(sel.has_value());
            } else {
                REQUIRE(sel.has_value());
                CHECK(sel->order == best);
                ComponentDecomposition check =
                    components_within(g, g.full_mask() & ~sel->cut.bits());
                bool found = false;
                for (const VertexSet& c : check.components) found = found || c == sel->odd_component;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("factor-critical graphs meet the connectivity bounds") {
    for (int n = 4; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            for (int k = 1; k <= 3 && k < n; ++k) {
                if ((n - k) % 2 != 0 || !is_k_factor_critical(g, k)) continue;
                CHECK(vertex_connectivity(g) >= k);
                CHECK(edge_connectivity(g) >= k + 1);
            }
        }
    }
}
