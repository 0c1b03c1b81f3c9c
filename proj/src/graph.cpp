#include "degseq/graph.hpp"

#include "degseq/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace degseq {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw InvalidGraph("negative vertex count");
    for (Edge& e : edges_) {
        if (e.u == e.v)
            throw InvalidGraph("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw InvalidGraph("edge endpoint out of range");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidGraph("duplicate edge");
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

BipartiteGraph::BipartiteGraph(Graph graph, std::vector<Side> sides)
    : graph_(std::move(graph)), sides_(std::move(sides)) {
    if (sides_.size() != static_cast<std::size_t>(graph_.n()))
        throw InvalidGraph("side assignment length differs from vertex count");
    for (const Edge& e : graph_.edges())
        if (sides_[static_cast<std::size_t>(e.u)] == sides_[static_cast<std::size_t>(e.v)])
            throw InvalidGraph("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               "} joins two vertices of the same side");
}

AdjacencyMatrix::AdjacencyMatrix(const Graph& g)
    : n_(g.n()), bits_(static_cast<std::size_t>(g.n()) * g.n(), 0), degree_(g.degrees()) {
    for (const Edge& e : g.edges()) {
        bits_[static_cast<std::size_t>(e.u) * n_ + e.v] = 1;
        bits_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    }
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<Edge> edges = g1.edges();
    edges.reserve(g1.edge_count() + g2.edge_count());
    for (const Edge& e : g2.edges())
        edges.push_back({e.u + g1.n(), e.v + g1.n()});
    return Graph(g1.n() + g2.n(), std::move(edges));
}

BipartiteGraph disjoint_union(const BipartiteGraph& g1, const BipartiteGraph& g2) {
    std::vector<Side> sides = g1.sides();
    sides.insert(sides.end(), g2.sides().begin(), g2.sides().end());
    return BipartiteGraph(disjoint_union(g1.graph(), g2.graph()), std::move(sides));
}

Realization disjoint_union(const Realization& g1, const Realization& g2) {
    Realization out(disjoint_union(g1.graph, g2.graph));
    if (g1.sides && g2.sides) {
        std::vector<Side> sides = *g1.sides;
        sides.insert(sides.end(), g2.sides->begin(), g2.sides->end());
        out.sides = std::move(sides);
    }
    return out;
}

DegreeSequence degree_sequence(const Graph& g) { return DegreeSequence(g.degrees()); }

std::optional<std::vector<Side>> two_coloring(const Graph& g) {
    const AdjacencyMatrix adj(g);
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0)
            continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < g.n(); ++v) {
                if (!adj(u, v))
                    continue;
                auto& cv = color[static_cast<std::size_t>(v)];
                const int want = 1 - color[static_cast<std::size_t>(u)];
                if (cv < 0) {
                    cv = want;
                    q.push(v);
                } else if (cv != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Side> sides(color.size());
    std::transform(color.begin(), color.end(), sides.begin(),
                   [](int c) { return c == 0 ? Side::A : Side::B; });
    return sides;
}

std::optional<std::string> erdos_gallai_violation(const DegreeSequence& d) {
    const auto& deg = d.degrees();
    const std::size_t n = deg.size();
    if (d.sum() % 2 != 0)
        return "odd-degree-sum";
    // suffix[i] = sum of deg[i..n-1]
    std::vector<Count> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = suffix[i + 1] + deg[i];
    Count lhs = 0;
    for (std::size_t t = 1; t <= n; ++t) {
        lhs += deg[t - 1];
        const auto tt = static_cast<Count>(t);
        // p = number of entries >= t; they form a prefix of the sorted list.
        const auto p = static_cast<std::size_t>(
            std::partition_point(deg.begin(), deg.end(), [&](int x) { return x >= tt; }) - deg.begin());
        const std::size_t capped = p > t ? p - t : 0;
        const Count rhs = tt * (tt - 1) + tt * static_cast<Count>(capped) + suffix[std::max(t, p)];
        if (lhs > rhs)
            return "erdos-gallai:t=" + std::to_string(t);
    }
    return std::nullopt;
}

Graph havel_hakimi_realize(const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    if (d.sum() % 2 != 0)
        throw NotGraphic("odd-degree-sum");
    std::vector<int> residual(d.begin(), d.end());
    std::vector<Edge> edges;
    std::vector<int> order(static_cast<std::size_t>(n));
    auto by_residual = [&](int a, int b) {
        const int ra = residual[static_cast<std::size_t>(a)], rb = residual[static_cast<std::size_t>(b)];
        return ra != rb ? ra > rb : a < b;
    };
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), by_residual);
        const int pivot = order.empty() ? -1 : order.front();
        if (pivot < 0 || residual[static_cast<std::size_t>(pivot)] == 0)
            break;
        const int need = residual[static_cast<std::size_t>(pivot)];
        if (need > n - 1 || residual[static_cast<std::size_t>(order[static_cast<std::size_t>(need)])] == 0)
            throw NotGraphic("havel-hakimi:vertex=" + std::to_string(pivot));
        for (int j = 1; j <= need; ++j) {
            const int w = order[static_cast<std::size_t>(j)];
            --residual[static_cast<std::size_t>(w)];
            edges.push_back({pivot, w});
        }
        residual[static_cast<std::size_t>(pivot)] = 0;
    }
    return Graph(n, std::move(edges));
}

std::optional<std::size_t> gale_ryser_violation(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.sum() != b.sum())
        return std::size_t{0};
    Count lhs = 0;
    for (std::size_t p = 1; p <= a.size(); ++p) {
        lhs += a[p - 1];
        Count rhs = 0;
        for (int x : b)
            rhs += std::min<Count>(x, static_cast<Count>(p));
        if (lhs > rhs)
            return p;
    }
    return std::nullopt;
}

BipartiteGraph bipartite_realize(const DegreeSequence& a, const DegreeSequence& b) {
    if (auto bad = gale_ryser_violation(a, b)) {
        throw NotBigraphic(*bad, *bad == 0 ? std::string("degree sums differ")
                                           : "gale-ryser:p=" + std::to_string(*bad));
    }
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    std::vector<int> ra(a.begin(), a.end());
    std::vector<int> rb(b.begin(), b.end());
    std::vector<Edge> edges;
    std::vector<int> order(static_cast<std::size_t>(nb));
    for (;;) {
        const auto it = std::max_element(ra.begin(), ra.end()); // first maximum = lowest index
        if (it == ra.end() || *it == 0)
            break;
        const int u = static_cast<int>(it - ra.begin());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return rb[static_cast<std::size_t>(x)] > rb[static_cast<std::size_t>(y)];
        });
        const int need = *it;
        if (need > nb || rb[static_cast<std::size_t>(order[static_cast<std::size_t>(need - 1)])] == 0)
            throw NotBigraphic(static_cast<std::size_t>(u) + 1, "greedy construction stalled");
        for (int j = 0; j < need; ++j) {
            const int w = order[static_cast<std::size_t>(j)];
            --rb[static_cast<std::size_t>(w)];
            edges.push_back({u, na + w});
        }
        *it = 0;
    }
    std::vector<Side> sides(static_cast<std::size_t>(na), Side::A);
    sides.resize(static_cast<std::size_t>(na + nb), Side::B);
    return BipartiteGraph(Graph(na + nb, std::move(edges)), std::move(sides));
}

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
    if (e.map.size() != static_cast<std::size_t>(pattern.n()))
        return false;
    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
    for (int h : e.map) {
        if (h < 0 || h >= host.n() || used[static_cast<std::size_t>(h)])
            return false;
        used[static_cast<std::size_t>(h)] = 1;
    }
    const AdjacencyMatrix pa(pattern), ha(host);
    for (int u = 0; u < pattern.n(); ++u)
        for (int v = u + 1; v < pattern.n(); ++v)
            if (pa(u, v) != ha(e.map[static_cast<std::size_t>(u)], e.map[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

namespace {

// Pattern vertices in search order: each next vertex has the most already
// placed neighbours (then highest degree, then lowest index).
std::vector<int> search_order(const AdjacencyMatrix& p) {
    const int n = p.n();
    std::vector<int> order;
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)])
                continue;
            if (best < 0 || placed_nbrs[static_cast<std::size_t>(v)] > placed_nbrs[static_cast<std::size_t>(best)] ||
                (placed_nbrs[static_cast<std::size_t>(v)] == placed_nbrs[static_cast<std::size_t>(best)] &&
                 p.degree(v) > p.degree(best)))
                best = v;
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (int v = 0; v < n; ++v)
            if (p(best, v))
                ++placed_nbrs[static_cast<std::size_t>(v)];
    }
    return order;
}

} // namespace

EmbeddingSearchResult search_induced_embedding(const Graph& pattern, const Graph& host, std::size_t budget) {
    EmbeddingSearchResult result;
    if (pattern.n() > host.n())
        return result;
    const AdjacencyMatrix pa(pattern), ha(host);
    const std::vector<int> order = search_order(pa);
    std::vector<int> map(static_cast<std::size_t>(pattern.n()), -1);
    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == order.size())
            return true;
        const int p = order[depth];
        for (int h = 0; h < host.n(); ++h) {
            if (used[static_cast<std::size_t>(h)] || ha.degree(h) < pa.degree(p))
                continue;
            if (++result.nodes > budget) {
                result.budget_exhausted = true;
                return false;
            }
            bool consistent = true;
            for (std::size_t j = 0; j < depth && consistent; ++j) {
                const int q = order[j];
                consistent = pa(p, q) == ha(h, map[static_cast<std::size_t>(q)]);
            }
            if (!consistent)
                continue;
            map[static_cast<std::size_t>(p)] = h;
            used[static_cast<std::size_t>(h)] = 1;
            if (extend(depth + 1))
                return true;
            if (result.budget_exhausted)
                return false;
            used[static_cast<std::size_t>(h)] = 0;
            map[static_cast<std::size_t>(p)] = -1;
        }
        return false;
    };

    if (extend(0))
        result.embedding = Embedding{std::move(map)};
    return result;
}

std::optional<Embedding> induced_embedding(const Graph& pattern, const Graph& host, std::size_t budget) {
    auto r = search_induced_embedding(pattern, host, budget);
    if (r.budget_exhausted)
        throw SearchLimitExceeded(budget);
    return std::move(r.embedding);
}

} // namespace degseq
