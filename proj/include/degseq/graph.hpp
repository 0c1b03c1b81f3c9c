#pragma once

#include "degseq/sequences.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace degseq {

struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on vertices 0..n-1. Edges are stored with the smaller
/// endpoint first and sorted lexicographically, so equal edge sets compare
/// equal.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {}
    /// Throws InvalidGraph on loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::vector<int> degrees() const;
    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

enum class Side : std::uint8_t { A = 0, B = 1 };

/// Graph plus a proper two-coloring. Either side may be empty.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    /// Throws InvalidGraph when sides has the wrong length or an edge is
    /// monochromatic.
    BipartiteGraph(Graph graph, std::vector<Side> sides);

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Side>& sides() const noexcept { return sides_; }

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    Graph graph_;
    std::vector<Side> sides_;
};

/// A family member as produced by a realizer: the graph, and the coloring
/// when the family carries one.
struct Realization {
    Graph graph;
    std::optional<std::vector<Side>> sides;

    Realization() = default;
    Realization(Graph g) : graph(std::move(g)) {}
    Realization(const BipartiteGraph& b) : graph(b.graph()), sides(b.sides()) {}

    friend bool operator==(const Realization&, const Realization&) = default;
};

/// Dense adjacency for search loops.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(const Graph& g);
    int n() const noexcept { return n_; }
    bool operator()(int u, int v) const { return bits_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }

private:
    int n_;
    std::vector<std::uint8_t> bits_;
    std::vector<int> degree_;
};

Graph disjoint_union(const Graph& g1, const Graph& g2);
BipartiteGraph disjoint_union(const BipartiteGraph& g1, const BipartiteGraph& g2);
/// Keeps the coloring only when both operands carry one.
Realization disjoint_union(const Realization& g1, const Realization& g2);

DegreeSequence degree_sequence(const Graph& g);

/// Proper two-coloring by BFS (lowest uncolored vertex gets side A), or
/// nullopt if g has an odd cycle.
std::optional<std::vector<Side>> two_coloring(const Graph& g);

/// Erdos-Gallai test. Returns nullopt when d is graphic, otherwise a short
/// machine-readable reason ("odd-degree-sum", "erdos-gallai:t=3").
std::optional<std::string> erdos_gallai_violation(const DegreeSequence& d);
inline bool is_graphic(const DegreeSequence& d) { return !erdos_gallai_violation(d); }

/// Havel-Hakimi with fixed tie-breaking: the largest residual degree (lowest
/// index on ties) is joined to the next-largest residuals (lowest index on
/// ties). Vertex i receives degree d[i]. Throws NotGraphic.
Graph havel_hakimi_realize(const DegreeSequence& d);

/// Gale-Ryser test. Returns nullopt when realizable; otherwise the prefix
/// length p of the first violated inequality (0 when the sums differ).
std::optional<std::size_t> gale_ryser_violation(const DegreeSequence& a, const DegreeSequence& b);

/// Greedy Gale-Ryser construction. Side A vertices are 0..|a|-1 (degree a[i]),
/// side B vertices follow. Throws NotBigraphic.
BipartiteGraph bipartite_realize(const DegreeSequence& a, const DegreeSequence& b);

/// map[p] is the host vertex assigned to pattern vertex p.
struct Embedding {
    std::vector<int> map;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff map is injective and u~v in pattern <=> map[u]~map[v] in host.
bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

inline constexpr std::size_t kDefaultEmbeddingBudget = 10'000'000;

struct EmbeddingSearchResult {
    std::optional<Embedding> embedding;
    std::size_t nodes = 0;         // candidate assignments tried
    bool budget_exhausted = false; // set only when the search stopped early
};

/// Backtracking search for an induced embedding. Never throws on budget
/// exhaustion; inspect budget_exhausted.
EmbeddingSearchResult search_induced_embedding(const Graph& pattern, const Graph& host,
                                               std::size_t budget = kDefaultEmbeddingBudget);

/// Same search; nullopt means no embedding exists. Throws SearchLimitExceeded
/// if the budget runs out first.
std::optional<Embedding> induced_embedding(const Graph& pattern, const Graph& host,
                                           std::size_t budget = kDefaultEmbeddingBudget);

} // namespace degseq
