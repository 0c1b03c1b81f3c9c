#pragma once

// Brute-force oracles. Everything here works by enumerating edge subsets of
// labeled graphs and shares no code path with the analytic tests it checks
// (Erdos-Gallai, split search, Havel-Hakimi, embedding backtracking).

#include "degseq/graph.hpp"
#include "degseq/parallel.hpp"
#include "degseq/sequences.hpp"

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

namespace degseq::testkit {

inline constexpr int kGraphCap = 7;
inline constexpr int kBipartiteCap = 6;

/// Edge index e <-> pair (u, v), u < v, in lexicographic order, so the first
/// n-1 edges are the ones at vertex 0.
std::vector<Edge> edge_slots(int n);
Graph graph_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& slots);

/// Every labeled simple graph on n vertices, once each, by edge subset.
class LabeledGraphs {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        iterator(const LabeledGraphs* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
        Graph operator*() const { return graph_from_mask(owner_->n_, mask_, owner_->slots_); }
        iterator& operator++() { ++mask_; return *this; }
        bool operator==(const iterator& o) const { return mask_ == o.mask_; }
    private:
        const LabeledGraphs* owner_;
        std::uint64_t mask_;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, std::uint64_t{1} << slots_.size()}; }
    std::uint64_t size() const { return std::uint64_t{1} << slots_.size(); }

private:
    friend LabeledGraphs enumerate_labeled_graphs(int n, int cap);
    LabeledGraphs(int n, std::vector<Edge> slots) : n_(n), slots_(std::move(slots)) {}
    int n_;
    std::vector<Edge> slots_;
};

/// Throws CapExceeded when n > cap.
LabeledGraphs enumerate_labeled_graphs(int n, int cap = kGraphCap);

/// Degree sequences (non-increasing) realized by some labeled graph on n
/// vertices. The parallel kernel splits the edge subsets by the incidence
/// pattern of vertex 0.
std::set<std::vector<int>> graphic_degree_sequences(int n, Execution exec = Execution::parallel, int cap = kGraphCap);

/// Same, restricted to graphs that admit a proper 2-coloring.
std::set<std::vector<int>> bipartite_degree_sequences(int n, Execution exec = Execution::parallel,
                                                      int cap = kBipartiteCap);

bool bruteforce_is_graphic(const DegreeSequence& d, int cap = kGraphCap);
bool bruteforce_is_bipartite_graphic(const DegreeSequence& d, int cap = kBipartiteCap);

/// Regularity sequences (cap k) of all graphs on exactly n vertices with
/// maximum degree <= k.
std::set<RegularitySequence, bool (*)(const RegularitySequence&, const RegularitySequence&)>
enumerate_graphic_regularity_sequences(int n, int k, int cap = kGraphCap);

/// Every induced embedding of pattern into host, by trying all injective maps.
std::vector<Embedding> enumerate_induced_embeddings(const Graph& pattern, const Graph& host, int cap = kGraphCap);

/// D1 below D2 in the induced-subgraph order, decided by enumerating every
/// labeled realization of D2 and every vertex subset of the right size.
bool bruteforce_rao_leq(const DegreeSequence& d1, const DegreeSequence& d2, int cap = kGraphCap);

struct BruteforceBasis {
    std::vector<Count> modulus;              // smallest t with t*e_i realized
    std::vector<RegularitySequence> minima;  // canonical order
};

/// Among all regularity sequences (cap k) realized by graphs (or 2-colorable
/// graphs) on at most max_n vertices: the residue modulus, and the nonzero
/// sequences that are componentwise-minimal within their residue class,
/// found by all-pairs comparison. Minima with total <= max_n are exact.
BruteforceBasis bruteforce_basis(int k, int max_n, bool bipartite);

/// Calls f on every non-increasing list of length n with entries <= max_entry.
template <class F>
void for_each_nonincreasing(int n, int max_entry, F&& f) {
    std::vector<int> d(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i, int hi) -> void {
        if (i == n) {
            f(static_cast<const std::vector<int>&>(d));
            return;
        }
        for (int x = hi; x >= 0; --x) {
            d[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, x);
        }
    };
    rec(rec, 0, max_entry);
}

/// Brute-force oracle against the analytic membership test on every
/// non-increasing sequence of length <= max_n with entries <= max_degree.
struct AgreementReport {
    int max_n = 0;
    int max_degree = 0;
    std::size_t cases = 0;
    std::size_t disagreements = 0;
    std::vector<DegreeSequence> examples; // first few disagreements
};

AgreementReport graph_oracle_agreement(int max_n = kGraphCap, int max_degree = 6,
                                       Execution exec = Execution::parallel);
AgreementReport bipartite_oracle_agreement(int max_n = kBipartiteCap, int max_degree = 6,
                                           Execution exec = Execution::parallel);

} // namespace degseq::testkit
