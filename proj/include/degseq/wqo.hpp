#pragma once

#include "degseq/decomposition.hpp"
#include "degseq/graph.hpp"
#include "degseq/parallel.hpp"
#include "degseq/semigroup.hpp"
#include "degseq/sequences.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace degseq {

enum class Comparison { less_or_equal, greater_or_equal, equal, incomparable };

const char* to_string(Comparison c);

/// Product-order verdict. Throws CapMismatch.
Comparison pointwise_compare(const RegularitySequence& a, const RegularitySequence& b);

/// First (i, j), i < j, with stream[i] <= stream[j], scanning j ascending and
/// then i ascending. Indices are 0-based. nullopt means the stream is an
/// antichain. Throws CapMismatch.
std::optional<std::pair<std::size_t, std::size_t>> find_comparable_pair(const std::vector<RegularitySequence>& stream);

/// Antichain check: the first offending pair (in either direction), or
/// nullopt when no two distinct positions are comparable.
std::optional<std::pair<std::size_t, std::size_t>> antichain_violation(const std::vector<RegularitySequence>& stream);

/// Coefficients over the nonzero basis elements (in basis order): 1 at the
/// chosen base element, plus c_i at the ground element of degree i.
struct MultiplicityVector {
    std::vector<Count> entries;
    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// Throws BasisIncomplete or NotMember.
MultiplicityVector multiplicity_vector(const RegularitySequence& r, const GeneratingSet& basis,
                                       const StructuredFamily& family);

/// Disjoint union of basis witnesses, entries[j] copies of nonzero element j,
/// in basis order.
Realization realize_multiplicity(const MultiplicityVector& v, const GeneratingSet& basis);

/// When v1 <= v2 componentwise, the induced embedding of realize_multiplicity(v1)
/// into realize_multiplicity(v2) that maps each copy of a basis witness onto
/// a copy of the same witness. nullopt otherwise.
std::optional<Embedding> multiplicity_embedding(const MultiplicityVector& v1, const MultiplicityVector& v2,
                                                const GeneratingSet& basis);

enum class WitnessKind { pointwise, multiplicity, embedding };

/// For the embedding kind, i and j index the pattern and host isomorphism
/// classes in enumeration order; otherwise they are stream positions.
struct ComparabilityWitness {
    WitnessKind kind = WitnessKind::embedding;
    std::size_t i = 0;
    std::size_t j = 0;
    // embedding kind only
    std::optional<Graph> pattern;
    std::optional<Graph> host;
    std::optional<Embedding> embedding;
};

enum class RaoVerdict { holds, fails, budget_exceeded };

/// What the exhaustive search looked at; a `fails` verdict is certified by
/// every pattern class having been tried against every host class.
struct RaoCertificate {
    std::size_t pattern_labeled = 0;   // labeled realizations of D1 enumerated
    std::size_t host_labeled = 0;      // labeled realizations of D2 enumerated
    std::size_t pattern_classes = 0;   // after isomorphism reduction
    std::size_t host_classes = 0;
    std::size_t pairs_tested = 0;
    std::size_t nodes = 0;             // total node expansions charged to the budget
};

struct RaoResult {
    RaoVerdict verdict = RaoVerdict::fails;
    std::optional<ComparabilityWitness> witness;
    RaoCertificate certificate;
};

/// All labeled realizations of d (vertex v has degree d[v]), reduced to one
/// representative per isomorphism class, in enumeration order. Expansions are
/// added to `nodes`; returns nullopt once nodes exceeds budget.
std::optional<std::vector<Graph>> realization_classes(const DegreeSequence& d, std::size_t budget,
                                                      std::size_t& nodes, std::size_t* labeled = nullptr);

/// Decides D1 <= D2 in the induced-subgraph order on realizations by
/// exhaustive search. Host classes are searched concurrently under
/// Execution::parallel; the verdict and witness match the serial order.
RaoResult rao_leq_bruteforce(const DegreeSequence& d1, const DegreeSequence& d2,
                             std::size_t budget = kDefaultEmbeddingBudget, Execution exec = Execution::parallel);

/// Empirical check of "x <= x' componentwise implies x is below x' in the
/// induced-subgraph order" on one pair.
struct MonotonicityProbe {
    Comparison pointwise;
    bool premise_holds = false;  // x <= x'
    RaoResult rao;
    bool counterexample = false; // premise holds and the search says fails
};

MonotonicityProbe probe_monotonicity(const RegularitySequence& x, const RegularitySequence& x_prime,
                                     std::size_t budget = kDefaultEmbeddingBudget);

} // namespace degseq
