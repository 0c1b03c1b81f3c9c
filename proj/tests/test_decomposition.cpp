#include "degseq/decomposition.hpp"
#include "degseq/error.hpp"

#include <doctest.h>

#include <random>

using namespace degseq;

TEST_CASE("decompose examples") {
    const auto graphs = graph_family();
    const auto d = decompose({3, 4}, graphs);
    CHECK(d.base == RegularitySequence{0, 0});
    CHECK(d.coefficients == std::vector<Count>{3, 2});
    CHECK(d.reconstruct() == RegularitySequence{3, 4});

    const auto e = decompose({0, 0, 4}, graphs);
    CHECK(e.base == RegularitySequence{0, 0, 4});
    CHECK(e.coefficients == std::vector<Count>{0, 0, 0});
    CHECK_THROWS_AS(decompose({0, 1}, graphs), NotMember);
}

TEST_CASE("decompose_over_basis") {
    const auto graphs = graph_family();
    const auto k1 = generating_set(graphs, 1, 30);
    const auto d = decompose_over_basis({3, 4}, k1, graphs);
    CHECK(d.base == RegularitySequence{0, 0});
    CHECK(d.coefficients == std::vector<Count>{3, 2});

    const auto k2 = generating_set(graphs, 2, 30);
    const auto e = decompose_over_basis({1, 2, 7}, k2, graphs);
    CHECK(e.base == RegularitySequence{0, 0, 4});
    CHECK(e.coefficients == std::vector<Count>{1, 1, 1});
    CHECK(e.reconstruct() == RegularitySequence{1, 2, 7});

    auto broken = k2;
    broken.elements.erase(broken.elements.begin() + static_cast<std::ptrdiff_t>(*broken.find({0, 2, 1})));
    CHECK_THROWS_AS(decompose_over_basis({0, 2, 1}, broken, graphs), BasisIncomplete);
    const auto fb = decompose_with_fallback({0, 2, 1}, broken, graphs);
    CHECK_FALSE(fb.used_basis);
    CHECK(fb.warning);
    CHECK(fb.decomposition.reconstruct() == RegularitySequence{0, 2, 1});
}

TEST_CASE("realize_decomposition") {
    const auto graphs = graph_family();
    const auto r = realize_decomposition(decompose({3, 4}, graphs), graphs);
    CHECK(r.components.size() == 5);
    CHECK(r.total.graph.n() == 7);
    CHECK(r.total.graph.edge_count() == 2);
    CHECK(degree_to_regularity(degree_sequence(r.total.graph), 1) == RegularitySequence{3, 4});

    const auto tri = realize_decomposition(decompose({0, 0, 3}, graphs), graphs);
    CHECK(tri.total.graph == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));

    const auto bip = bipartite_family();
    const auto c4 = realize_decomposition(decompose({0, 0, 4}, bip), bip);
    REQUIRE(c4.total.sides);
    CHECK(c4.total.graph.edge_count() == 4);
    CHECK_NOTHROW(BipartiteGraph(c4.total.graph, *c4.total.sides));
}

TEST_CASE("max_component_bound") {
    const auto graphs = graph_family();
    CHECK(max_component_bound(generating_set(graphs, 0, 10)) == 1);
    CHECK(max_component_bound(generating_set(graphs, 1, 10)) == 2);
    CHECK(max_component_bound(generating_set(graphs, 2, 30)) == 5);
}

TEST_CASE("decomposition properties on random members") {
    const auto graphs = graph_family();
    const auto k3 = generating_set(graphs, 3, 30);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Count> c(4);
        for (auto& x : c)
            x = static_cast<Count>(rng() % 12);
        const RegularitySequence r(c);
        if (!graphs.is_member(r))
            continue;
        const auto d = decompose_over_basis(r, k3, graphs);
        CHECK(d.reconstruct() == r);
        CHECK(graphs.is_member(d.base));
        // decomposing the base again changes nothing
        const auto again = decompose_over_basis(d.base, k3, graphs);
        CHECK(again.base == d.base);
        CHECK(again.coefficients == std::vector<Count>(4, 0));
        const auto real = realize_decomposition(d, graphs);
        CHECK(degree_to_regularity(degree_sequence(real.total.graph), 3) == r);
        for (const auto& comp : real.components)
            CHECK(comp.graph.n() <= max_component_bound(k3));
    }
}
