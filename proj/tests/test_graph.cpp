#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/testkit.hpp"

#include <doctest.h>

#include <random>

using namespace degseq;

namespace {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.push_back({u, v});
    return Graph(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v)
        e.push_back({v, v + 1});
    return Graph(n, e);
}

Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                e.push_back({u, v});
    return Graph(n, e);
}

} // namespace

TEST_CASE("graph construction normalizes and validates edges") {
    const Graph g(3, {{2, 1}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidGraph);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidGraph);
    CHECK_THROWS_AS(BipartiteGraph(Graph(2, {{0, 1}}), {Side::A, Side::A}), InvalidGraph);
}

TEST_CASE("disjoint_union shifts the second operand") {
    CHECK(disjoint_union(complete(1), complete(1)) == Graph(2));
    CHECK(disjoint_union(complete(2), complete(2)) == Graph(4, {{0, 1}, {2, 3}}));
    CHECK(disjoint_union(path(3), Graph(0)) == path(3));
    const BipartiteGraph k11(complete(2), {Side::A, Side::B});
    const auto u = disjoint_union(k11, k11);
    CHECK(u.sides() == std::vector<Side>{Side::A, Side::B, Side::A, Side::B});
    const Realization mixed = disjoint_union(Realization(k11), Realization(complete(3)));
    CHECK_FALSE(mixed.sides.has_value());
}

TEST_CASE("degree_sequence") {
    CHECK(degree_sequence(complete(3)) == DegreeSequence{2, 2, 2});
    CHECK(degree_sequence(path(3)) == DegreeSequence{2, 1, 1});
    CHECK(degree_sequence(Graph(0)).empty());
}

TEST_CASE("Erdos-Gallai reasons") {
    CHECK(is_graphic({3, 3, 3, 3}));
    CHECK(erdos_gallai_violation({1}) == std::optional<std::string>("odd-degree-sum"));
    CHECK(erdos_gallai_violation({3, 1}) == std::optional<std::string>("erdos-gallai:t=1"));
    CHECK(erdos_gallai_violation({3, 3, 1, 1}) == std::optional<std::string>("erdos-gallai:t=2"));
    CHECK(is_graphic(DegreeSequence{}));
}

TEST_CASE("havel_hakimi_realize") {
    CHECK(havel_hakimi_realize({1, 1}) == complete(2));
    // (2,2,2) has one realization up to isomorphism, and the oracle agrees.
    CHECK(testkit::bruteforce_is_graphic({2, 2, 2}));
    CHECK(havel_hakimi_realize({2, 2, 2}) == complete(3));
    CHECK_THROWS_AS(havel_hakimi_realize({3, 1, 1}), NotGraphic);
    CHECK_THROWS_AS(havel_hakimi_realize({1}), NotGraphic);
    CHECK(havel_hakimi_realize(DegreeSequence{}) == Graph(0));
    // fixed tie-breaking: byte-identical on repeated calls
    CHECK(havel_hakimi_realize({3, 3, 2, 2, 2}) == havel_hakimi_realize({2, 3, 2, 3, 2}));
}

TEST_CASE("havel_hakimi_realize reproduces every graphic sequence up to n = 7") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& d : testkit::graphic_degree_sequences(n)) {
            const DegreeSequence ds(d);
            CHECK(degree_sequence(havel_hakimi_realize(ds)) == ds);
        }
    }
}

TEST_CASE("bipartite_realize") {
    const auto c4 = bipartite_realize({2, 2}, {2, 2});
    CHECK(c4.graph() == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    const auto k11 = bipartite_realize({1}, {1});
    CHECK(k11.graph() == complete(2));
    CHECK(k11.sides() == std::vector<Side>{Side::A, Side::B});
    try {
        bipartite_realize({2}, {1});
        FAIL("expected NotBigraphic");
    } catch (const NotBigraphic& e) {
        CHECK(e.violated_index == 0);
    }
    try {
        bipartite_realize({2}, {2}); // one B vertex cannot take a double edge
        FAIL("expected NotBigraphic");
    } catch (const NotBigraphic& e) {
        CHECK(e.violated_index == 1);
    }
    // one empty side is legal
    CHECK(bipartite_realize({0}, {}).graph() == Graph(1));
}

TEST_CASE("bipartite_realize output is properly colored for random Gale-Ryser pairs") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        // random bipartite graph gives a realizable pair
        const int na = 1 + static_cast<int>(rng() % 6), nb = 1 + static_cast<int>(rng() % 6);
        std::vector<int> da(static_cast<std::size_t>(na), 0), db(static_cast<std::size_t>(nb), 0);
        for (int u = 0; u < na; ++u)
            for (int v = 0; v < nb; ++v)
                if (rng() % 2) {
                    ++da[static_cast<std::size_t>(u)];
                    ++db[static_cast<std::size_t>(v)];
                }
        const DegreeSequence a(da), b(db);
        const auto g = bipartite_realize(a, b);
        CHECK(two_coloring(g.graph()).has_value());
        std::vector<int> ga, gb;
        const auto deg = g.graph().degrees();
        for (int v = 0; v < g.graph().n(); ++v)
            (g.sides()[static_cast<std::size_t>(v)] == Side::A ? ga : gb).push_back(deg[static_cast<std::size_t>(v)]);
        CHECK(DegreeSequence(ga) == a);
        CHECK(DegreeSequence(gb) == b);
    }
}

TEST_CASE("induced_embedding examples") {
    const auto e = induced_embedding(complete(2), path(3));
    REQUIRE(e);
    CHECK(is_induced_embedding(complete(2), path(3), *e));
    const Graph p = prism();
    const auto self = induced_embedding(p, p);
    REQUIRE(self);
    CHECK(is_induced_embedding(p, p, *self));
    // The prism's two triangles are vertex-disjoint; the oracle confirms no K4.
    CHECK(testkit::enumerate_induced_embeddings(complete(4), p).empty());
    CHECK_FALSE(induced_embedding(complete(4), p));
    // non-induced copy is not enough: P3 is a subgraph of K3 but not induced
    CHECK_FALSE(induced_embedding(path(3), complete(3)));
    CHECK(induced_embedding(Graph(0), Graph(0)));
    CHECK_FALSE(induced_embedding(complete(3), complete(2)));
}

TEST_CASE("induced_embedding budget exhaustion is distinct from absence") {
    CHECK_THROWS_AS(induced_embedding(complete(4), prism(), 3), SearchLimitExceeded);
    const auto r = search_induced_embedding(complete(4), prism(), 3);
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.embedding);
}

TEST_CASE("induced_embedding agrees with the enumerating oracle on random small graphs") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 400; ++iter) {
        const int nh = static_cast<int>(rng() % 8);
        const int np = nh == 0 ? 0 : static_cast<int>(rng() % (nh + 1));
        const Graph host = random_graph(rng, nh, 0.5);
        const Graph pattern = random_graph(rng, np, 0.5);
        const auto found = induced_embedding(pattern, host);
        const bool oracle = !testkit::enumerate_induced_embeddings(pattern, host).empty();
        CHECK(found.has_value() == oracle);
        if (found)
            CHECK(is_induced_embedding(pattern, host, *found));
    }
}

TEST_CASE("additivity of regularity sequences under disjoint union") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        const Graph g = random_graph(rng, static_cast<int>(rng() % 10), 0.3);
        const Graph h = random_graph(rng, static_cast<int>(rng() % 10), 0.3);
        const int k = 9;
        CHECK(degree_to_regularity(degree_sequence(disjoint_union(g, h)), k) ==
              add_regularity(degree_to_regularity(degree_sequence(g), k), degree_to_regularity(degree_sequence(h), k)));
    }
}
