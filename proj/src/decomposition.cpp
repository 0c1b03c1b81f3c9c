#include "degseq/decomposition.hpp"

#include "degseq/error.hpp"

#include <algorithm>

namespace degseq {

namespace {

Decomposition from_base(const RegularitySequence& r, RegularitySequence base, const ResidueModulus& t) {
    Decomposition dec{std::move(base), std::vector<Count>(r.size(), 0), t};
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Count diff = r[i] - dec.base[i];
        if (diff < 0 || diff % t.t[i] != 0)
            throw Error("base " + to_string(dec.base) + " is not below and congruent to " + to_string(r));
        dec.coefficients[i] = diff / t.t[i];
    }
    return dec;
}

} // namespace

RegularitySequence Decomposition::reconstruct() const {
    std::vector<Count> counts = base.counts();
    for (std::size_t i = 0; i < counts.size(); ++i)
        counts[i] = checked_add(counts[i], checked_mul(coefficients[i], modulus.t[i]));
    return RegularitySequence(std::move(counts));
}

Decomposition decompose(const RegularitySequence& r, const StructuredFamily& family) {
    return decompose(r, family, residue_modulus(family, r.k()));
}

Decomposition decompose(const RegularitySequence& r, const StructuredFamily& family, const ResidueModulus& t) {
    return from_base(r, greedy_minimize(r, t, family), t);
}

Decomposition decompose_over_basis(const RegularitySequence& r, const GeneratingSet& basis,
                                   const StructuredFamily& family) {
    if (r.k() != basis.k)
        throw CapMismatch(r.k(), basis.k);
    if (!family.is_member(r))
        throw NotMember(to_string(r));
    const auto idx = covering_element(basis, r);
    if (!idx)
        throw BasisIncomplete(to_string(r));
    return from_base(r, basis.elements[*idx].counts, basis.modulus);
}

RealizedDecomposition realize_decomposition(const Decomposition& dec, const StructuredFamily& family) {
    RealizedDecomposition out;
    if (!dec.base.is_zero())
        out.components.push_back(family.realize(dec.base));
    for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
        if (dec.coefficients[i] == 0)
            continue;
        const Realization witness = family.ground(static_cast<int>(i)).witness;
        out.components.insert(out.components.end(), static_cast<std::size_t>(dec.coefficients[i]), witness);
    }
    const bool colored = std::all_of(out.components.begin(), out.components.end(),
                                     [](const Realization& c) { return c.sides.has_value(); });
    out.total = Realization(Graph(0));
    if (colored)
        out.total.sides = std::vector<Side>{};
    for (const Realization& c : out.components)
        out.total = disjoint_union(out.total, c);
    return out;
}

int max_component_bound(const GeneratingSet& basis) {
    int bound = 0;
    for (const auto& e : basis.elements)
        bound = std::max(bound, e.witness.graph.n());
    return bound;
}

DecompositionOutcome decompose_with_fallback(const RegularitySequence& r, const GeneratingSet& basis,
                                             const StructuredFamily& family) {
    try {
        return {decompose_over_basis(r, basis, family), true, std::nullopt};
    } catch (const BasisIncomplete& e) {
        return {decompose(r, family, basis.modulus), false,
                std::string(e.what()) + "; used per-instance greedy decomposition"};
    }
}

} // namespace degseq
