#pragma once

#include "degseq/family.hpp"
#include "degseq/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace degseq {

/// r = base + sum_i coefficients[i] * modulus.t[i] * e_i
struct Decomposition {
    RegularitySequence base;
    std::vector<Count> coefficients;
    ResidueModulus modulus;

    RegularitySequence reconstruct() const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct RealizedDecomposition {
    /// Realization of the base (when nonzero), then coefficients[i] copies of
    /// the degree-i ground witness for i = 0..k.
    std::vector<Realization> components;
    Realization total;
};

/// Per-instance route: base = greedy_minimize(r). Throws NotMember.
Decomposition decompose(const RegularitySequence& r, const StructuredFamily& family);
Decomposition decompose(const RegularitySequence& r, const StructuredFamily& family, const ResidueModulus& t);

/// Basis route: base is the covering_element of r. Throws NotMember, or
/// BasisIncomplete when no element covers r.
Decomposition decompose_over_basis(const RegularitySequence& r, const GeneratingSet& basis,
                                   const StructuredFamily& family);

RealizedDecomposition realize_decomposition(const Decomposition& dec, const StructuredFamily& family);

/// Largest witness vertex count in the basis.
int max_component_bound(const GeneratingSet& basis);

/// Basis route, falling back to the per-instance route when the basis does
/// not cover r. `warning` is set when the fallback was taken.
struct DecompositionOutcome {
    Decomposition decomposition;
    bool used_basis = true;
    std::optional<std::string> warning;
};
DecompositionOutcome decompose_with_fallback(const RegularitySequence& r, const GeneratingSet& basis,
                                             const StructuredFamily& family);

} // namespace degseq
