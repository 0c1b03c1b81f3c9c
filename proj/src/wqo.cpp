#include "degseq/wqo.hpp"

#include "degseq/error.hpp"

#include <algorithm>
#include <map>

namespace degseq {

const char* to_string(Comparison c) {
    switch (c) {
    case Comparison::less_or_equal: return "less-or-equal";
    case Comparison::greater_or_equal: return "greater-or-equal";
    case Comparison::equal: return "equal";
    case Comparison::incomparable: return "incomparable";
    }
    return "?";
}

Comparison pointwise_compare(const RegularitySequence& a, const RegularitySequence& b) {
    const bool le = leq(a, b);
    const bool ge = leq(b, a);
    if (le && ge)
        return Comparison::equal;
    if (le)
        return Comparison::less_or_equal;
    if (ge)
        return Comparison::greater_or_equal;
    return Comparison::incomparable;
}

std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(const std::vector<RegularitySequence>& stream) {
    for (std::size_t j = 1; j < stream.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (leq(stream[i], stream[j]))
                return std::pair{i, j};
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> antichain_violation(const std::vector<RegularitySequence>& stream) {
    for (std::size_t j = 1; j < stream.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (pointwise_compare(stream[i], stream[j]) != Comparison::incomparable)
                return std::pair{i, j};
    return std::nullopt;
}

MultiplicityVector multiplicity_vector(const RegularitySequence& r, const GeneratingSet& basis,
                                       const StructuredFamily& family) {
    const Decomposition dec = decompose_over_basis(r, basis, family);
    MultiplicityVector v{std::vector<Count>(basis.elements.size() - 1, 0)};
    if (!dec.base.is_zero())
        v.entries[*basis.find(dec.base) - 1] += 1;
    for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
        if (dec.coefficients[i] == 0)
            continue;
        std::vector<Count> ground(dec.coefficients.size(), 0);
        ground[i] = basis.modulus.t[i];
        const auto idx = basis.find(RegularitySequence(std::move(ground)));
        if (!idx)
            throw BasisIncomplete("ground element of degree " + std::to_string(i));
        v.entries[*idx - 1] += dec.coefficients[i];
    }
    return v;
}

Realization realize_multiplicity(const MultiplicityVector& v, const GeneratingSet& basis) {
    Realization total(Graph(0));
    const bool colored = std::all_of(basis.elements.begin(), basis.elements.end(),
                                     [](const BasisElement& e) { return e.witness.sides.has_value(); });
    if (colored)
        total.sides = std::vector<Side>{};
    for (std::size_t j = 0; j < v.entries.size(); ++j)
        for (Count c = 0; c < v.entries[j]; ++c)
            total = disjoint_union(total, basis.elements[j + 1].witness);
    return total;
}

std::optional<Embedding> multiplicity_embedding(const MultiplicityVector& v1, const MultiplicityVector& v2,
                                                const GeneratingSet& basis) {
    if (v1.entries.size() != v2.entries.size())
        return std::nullopt;
    for (std::size_t j = 0; j < v1.entries.size(); ++j)
        if (v1.entries[j] > v2.entries[j])
            return std::nullopt;
    Embedding e;
    int host_offset = 0;
    for (std::size_t j = 0; j < v1.entries.size(); ++j) {
        const int size = basis.elements[j + 1].witness.graph.n();
        for (Count c = 0; c < v1.entries[j]; ++c)
            for (int x = 0; x < size; ++x)
                e.map.push_back(host_offset + static_cast<int>(c) * size + x);
        host_offset += static_cast<int>(v2.entries[j]) * size;
    }
    return e;
}

namespace {

// Per-vertex (degree, sorted neighbour degrees, triangles through v), sorted.
// Isomorphic graphs get equal keys.
std::vector<int> invariant_key(const Graph& g) {
    const AdjacencyMatrix adj(g);
    const int n = g.n();
    std::vector<std::vector<int>> rows;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nbr;
        int triangles = 0;
        for (int u = 0; u < n; ++u) {
            if (!adj(v, u))
                continue;
            nbr.push_back(adj.degree(u));
            for (int w = u + 1; w < n; ++w)
                triangles += adj(v, w) && adj(u, w);
        }
        std::sort(nbr.begin(), nbr.end());
        std::vector<int> row{adj.degree(v), triangles};
        row.insert(row.end(), nbr.begin(), nbr.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::vector<int> key;
    for (auto& row : rows) {
        key.push_back(static_cast<int>(row.size()));
        key.insert(key.end(), row.begin(), row.end());
    }
    return key;
}

} // namespace

std::optional<std::vector<Graph>> realization_classes(const DegreeSequence& d, std::size_t budget,
                                                      std::size_t& nodes, std::size_t* labeled) {
    const int n = static_cast<int>(d.size());
    std::vector<Graph> reps;
    if (!is_graphic(d))
        return reps;

    std::map<std::vector<int>, std::vector<std::size_t>> buckets;
    std::vector<int> residual(d.begin(), d.end());
    std::vector<Edge> edges;
    bool exhausted = false;

    auto accept = [&](const Graph& g) {
        if (labeled)
            ++*labeled;
        auto& bucket = buckets[invariant_key(g)];
        for (std::size_t idx : bucket) {
            const std::size_t left = budget > nodes ? budget - nodes : 0;
            auto r = search_induced_embedding(g, reps[idx], left);
            nodes += r.nodes;
            if (r.budget_exhausted) {
                exhausted = true;
                return;
            }
            if (r.embedding)
                return;
        }
        bucket.push_back(reps.size());
        reps.push_back(g);
    };

    // Saturate vertices in index order; vertex v picks its remaining
    // neighbours among later vertices with spare degree, as combinations in
    // lexicographic order. Every labeled realization appears exactly once.
    auto saturate = [&](auto&& self, int v) -> void {
        if (exhausted)
            return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (v == n) {
            accept(Graph(n, edges));
            return;
        }
        const int need = residual[static_cast<std::size_t>(v)];
        std::vector<int> cand;
        for (int w = v + 1; w < n; ++w)
            if (residual[static_cast<std::size_t>(w)] > 0)
                cand.push_back(w);
        if (static_cast<int>(cand.size()) < need)
            return;
        std::vector<int> pick;
        auto choose = [&](auto&& choose_self, std::size_t from) -> void {
            if (exhausted)
                return;
            if (static_cast<int>(pick.size()) == need) {
                residual[static_cast<std::size_t>(v)] = 0;
                for (int w : pick) {
                    --residual[static_cast<std::size_t>(w)];
                    edges.push_back({v, w});
                }
                self(self, v + 1);
                for (int w : pick) {
                    ++residual[static_cast<std::size_t>(w)];
                    edges.pop_back();
                }
                residual[static_cast<std::size_t>(v)] = need;
                return;
            }
            const std::size_t still = static_cast<std::size_t>(need) - pick.size();
            for (std::size_t i = from; i + still <= cand.size(); ++i) {
                pick.push_back(cand[i]);
                choose_self(choose_self, i + 1);
                pick.pop_back();
            }
        };
        choose(choose, 0);
    };
    saturate(saturate, 0);
    if (exhausted)
        return std::nullopt;
    return reps;
}

RaoResult rao_leq_bruteforce(const DegreeSequence& d1, const DegreeSequence& d2, std::size_t budget,
                             Execution exec) {
    RaoResult result;
    auto& cert = result.certificate;
    std::size_t nodes = 0;
    auto patterns = realization_classes(d1, budget, nodes, &cert.pattern_labeled);
    std::optional<std::vector<Graph>> hosts;
    if (patterns)
        hosts = realization_classes(d2, budget, nodes, &cert.host_labeled);
    if (!patterns || !hosts) {
        cert.nodes = nodes;
        result.verdict = RaoVerdict::budget_exceeded;
        return result;
    }
    cert.pattern_classes = patterns->size();
    cert.host_classes = hosts->size();

    struct HostOutcome {
        std::optional<std::size_t> pattern;
        std::optional<Embedding> embedding;
        std::size_t nodes = 0;
        std::size_t pairs = 0;
        bool exhausted = false;
    };
    // Every host gets the full remaining budget; the ordered merge below
    // charges nodes exactly as a serial scan would have.
    const std::size_t phase_budget = budget - nodes;
    std::vector<HostOutcome> outcomes(hosts->size());
    auto search_host = [&](std::size_t h) {
        HostOutcome& out = outcomes[h];
        for (std::size_t p = 0; p < patterns->size(); ++p) {
            ++out.pairs;
            auto r = search_induced_embedding((*patterns)[p], (*hosts)[h], phase_budget - out.nodes);
            out.nodes += r.nodes;
            if (r.budget_exhausted) {
                out.exhausted = true;
                return;
            }
            if (r.embedding) {
                out.pattern = p;
                out.embedding = std::move(r.embedding);
                return;
            }
        }
    };
    const auto host_count = static_cast<std::ptrdiff_t>(hosts->size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t h = 0; h < host_count; ++h)
            search_host(static_cast<std::size_t>(h));
    } else {
        for (std::ptrdiff_t h = 0; h < host_count; ++h)
            search_host(static_cast<std::size_t>(h));
    }

    for (std::size_t h = 0; h < outcomes.size(); ++h) {
        const HostOutcome& out = outcomes[h];
        nodes += out.nodes;
        cert.pairs_tested += out.pairs;
        if (out.exhausted || nodes > budget) {
            result.verdict = RaoVerdict::budget_exceeded;
            break;
        }
        if (out.embedding) {
            result.verdict = RaoVerdict::holds;
            ComparabilityWitness w;
            w.kind = WitnessKind::embedding;
            w.i = *out.pattern;
            w.j = h;
            w.pattern = (*patterns)[*out.pattern];
            w.host = (*hosts)[h];
            w.embedding = out.embedding;
            result.witness = std::move(w);
            break;
        }
    }
    cert.nodes = nodes;
    return result;
}

MonotonicityProbe probe_monotonicity(const RegularitySequence& x, const RegularitySequence& x_prime,
                                     std::size_t budget) {
    MonotonicityProbe probe;
    probe.pointwise = pointwise_compare(x, x_prime);
    probe.premise_holds = probe.pointwise == Comparison::less_or_equal || probe.pointwise == Comparison::equal;
    probe.rao = rao_leq_bruteforce(regularity_to_degree(x), regularity_to_degree(x_prime), budget);
    probe.counterexample = probe.premise_holds && probe.rao.verdict == RaoVerdict::fails;
    return probe;
}

} // namespace degseq
