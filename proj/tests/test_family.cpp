#include "degseq/error.hpp"
#include "degseq/family.hpp"
#include "degseq/semigroup.hpp"
#include "degseq/testkit.hpp"

#include <doctest.h>

using namespace degseq;

namespace {

RegularitySequence regularity_of(const Realization& r, int k) {
    return degree_to_regularity(degree_sequence(r.graph), k);
}

} // namespace

TEST_CASE("graph_is_member") {
    CHECK(graph_is_member({0, 0, 0, 4}));
    CHECK_FALSE(graph_is_member({0, 1}));
    // P3 is the only shape on 3 vertices with degrees (2,1,1)
    CHECK(testkit::bruteforce_is_graphic({2, 1, 1}));
    CHECK(graph_is_member({0, 2, 1}));
    CHECK(graph_is_member({0}));
}

TEST_CASE("bipartite_is_member") {
    CHECK(bipartite_is_member({0, 0, 4}));
    CHECK_FALSE(testkit::bruteforce_is_bipartite_graphic({2, 2, 2}));
    CHECK_FALSE(bipartite_is_member({0, 0, 3}));
    CHECK_FALSE(testkit::bruteforce_is_bipartite_graphic({3, 3, 3, 3}));
    CHECK_FALSE(bipartite_is_member({0, 0, 0, 4}));
    CHECK(bipartite_is_member({3, 0}));
    CHECK(bipartite_is_member({0, 3, 0, 1})); // star K_{1,3}
    CHECK_FALSE(bipartite_is_member({0, 1}));
}

TEST_CASE("bipartite split search reports cap exhaustion") {
    CHECK_THROWS_AS(bipartite_is_member({0, 0, 4}, 0), SplitSpaceExceeded);
    CHECK_NOTHROW(bipartite_is_member({0, 0, 4}, 1));
}

TEST_CASE("ground elements of the built-in families") {
    const auto graphs = graph_family();
    const auto bip = bipartite_family();

    const auto g0 = ground_element(graphs, 0);
    CHECK(g0.size == 1);
    CHECK(g0.witness.graph == Graph(1));

    const auto g3 = ground_element(graphs, 3);
    CHECK(g3.size == 4);
    CHECK(g3.witness.graph.edge_count() == 6); // K4

    const auto b2 = ground_element(bip, 2);
    CHECK(b2.size == 4);
    CHECK(b2.witness.graph == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    REQUIRE(b2.witness.sides);
    for (Count t = 1; t < 4; ++t)
        CHECK_FALSE(bip.is_member(RegularitySequence{0, 0, t}));
}

TEST_CASE("ground sizes: graphs i+1, bipartite 2i, confirmed against brute force") {
    // the brute-force modulus comes from enumerating all graphs on <= 6 vertices
    const auto bf_graph = testkit::bruteforce_basis(5, 6, false).modulus;
    const auto bf_bip = testkit::bruteforce_basis(3, 6, true).modulus;
    CHECK(bf_graph == std::vector<Count>{1, 2, 3, 4, 5, 6});
    CHECK(bf_bip == std::vector<Count>{1, 2, 4, 6});

    const auto graphs = graph_family();
    const auto bip = bipartite_family();
    for (int i = 0; i <= 6; ++i) {
        const auto g = ground_element(graphs, i);
        CHECK(g.size == (i == 0 ? 1 : i + 1));
        CHECK(regularity_of(g.witness, i).support() == std::vector<int>{i});
        const auto b = ground_element(bip, i);
        CHECK(b.size == (i == 0 ? 1 : 2 * i));
        CHECK(regularity_of(b.witness, i).support() == std::vector<int>{i});
        CHECK(two_coloring(b.witness.graph));
    }
}

TEST_CASE("realize_member") {
    const auto graphs = graph_family();
    const auto bip = bipartite_family();
    CHECK(realize_member(graphs, {0, 0, 3}).graph == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(realize_member(graphs, {2, 0}).graph == Graph(2));
    const auto c4 = realize_member(bip, {0, 0, 4});
    CHECK(c4.graph == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(c4.sides == std::vector<Side>{Side::A, Side::A, Side::B, Side::B});
    CHECK_THROWS_AS(realize_member(graphs, {0, 1}), NotMember);
    CHECK_THROWS_AS(realize_member(bip, {0, 0, 3}), NotMember);
    CHECK(realize_member(graphs, {0, 0}).graph == Graph(0));
}

TEST_CASE("realizer fidelity over all small members") {
    const auto graphs = graph_family();
    const auto bip = bipartite_family();
    for (int k = 0; k <= 4; ++k)
        for (Count total = 0; total <= 9; ++total)
            for_each_tuple_with_total(k, total, [&](const std::vector<Count>& c) {
                const RegularitySequence r(c);
                if (graphs.is_member(r))
                    CHECK(regularity_of(graphs.realize(r), k) == r);
                if (bip.is_member(r)) {
                    const auto b = bip.realize(r);
                    CHECK(regularity_of(b, k) == r);
                    CHECK(BipartiteGraph(b.graph, *b.sides).graph() == b.graph);
                }
            });
}

TEST_CASE("custom family through the descriptor interface") {
    // Disjoint unions of cycles: exactly the 2-regular graphs plus isolated vertices.
    StructuredFamily cycles(
        "cycles",
        [](const RegularitySequence& r) {
            for (std::size_t i = 0; i < r.size(); ++i)
                if (i != 0 && i != 2 && r[i] > 0)
                    return false;
            return r.size() < 3 || r[2] == 0 || r[2] >= 3;
        },
        [](const RegularitySequence& r) { return Realization(havel_hakimi_realize(regularity_to_degree(r))); });
    CHECK(ground_element(cycles, 2).size == 3);
    CHECK_THROWS_AS(ground_element(cycles, 1), NoRegularFound);
    CHECK(cycles.is_member(RegularitySequence(4))); // empty structure
}

TEST_CASE("zero sequence realizes as the empty structure") {
    CHECK(realize_member(graph_family(), {0, 0, 0}).graph == Graph(0));
    const auto b = realize_member(bipartite_family(), {0, 0, 0});
    CHECK(b.graph == Graph(0));
    CHECK(b.sides == std::vector<Side>{});
}
