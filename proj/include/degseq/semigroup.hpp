#pragma once

#include "degseq/family.hpp"
#include "degseq/graph.hpp"
#include "degseq/parallel.hpp"
#include "degseq/sequences.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace degseq {

/// t[i] = size of the minimal ground element of degree i.
struct ResidueModulus {
    std::vector<Count> t;

    int k() const noexcept { return static_cast<int>(t.size()) - 1; }
    /// Product of all t[i]: the number of residue classes.
    Count label_count() const;
    friend bool operator==(const ResidueModulus&, const ResidueModulus&) = default;
};

/// Coordinatewise residues, 0 <= r[i] < t[i].
struct ResidueLabel {
    std::vector<Count> r;
    friend bool operator==(const ResidueLabel&, const ResidueLabel&) = default;
    friend auto operator<=>(const ResidueLabel&, const ResidueLabel&) = default;
};

ResidueModulus residue_modulus(const StructuredFamily& family, int k);
ResidueLabel residue_class_of(const RegularitySequence& r, const ResidueModulus& t);

/// Labels in lexicographic order are numbered 0..label_count()-1.
ResidueLabel label_at(Count index, const ResidueModulus& t);
Count label_index(const ResidueLabel& label, const ResidueModulus& t);

/// Single-coordinate descent: repeatedly subtract t[i] from coordinate i
/// (scanning i = k down to 0, restarting after each success) while the result
/// stays a member. Throws NotMember if r is not a member.
RegularitySequence greedy_minimize(const RegularitySequence& r, const ResidueModulus& t,
                                   const StructuredFamily& family);

/// Nonzero members of the residue class with total vertex count <= bound that
/// are minimal under the componentwise order among class members. Returned
/// in canonical order.
std::vector<RegularitySequence> minimal_elements(const ResidueLabel& label, const ResidueModulus& t,
                                                 const StructuredFamily& family, Count bound);

struct BasisElement {
    RegularitySequence counts;
    Realization witness;
};

struct ClassMinima {
    ResidueLabel label;
    std::vector<RegularitySequence> minima;
};

struct GeneratingSet {
    std::string family;
    int k = 0;
    ResidueModulus modulus;
    Count bound = 0;
    /// Zero sequence first, then every class minimum in canonical order.
    std::vector<BasisElement> elements;
    /// Nonempty antichains only, in label order.
    std::vector<ClassMinima> classes;

    /// Index of the element with these counts, if present.
    std::optional<std::size_t> find(const RegularitySequence& r) const;
};

GeneratingSet generating_set(const StructuredFamily& family, int k, Count bound,
                             Execution exec = Execution::parallel);

/// True for t[i] * e_i, the ground element of degree i.
bool is_ground(const RegularitySequence& r, const ResidueModulus& t);

/// Largest-total basis element m with m <= r and m congruent to r (ties go to
/// the earlier element in canonical order), or nullopt. Ground elements are
/// skipped: the coefficients already carry them, and zero covers whatever a
/// ground element would.
std::optional<std::size_t> covering_element(const GeneratingSet& basis, const RegularitySequence& r);

struct BasisReport {
    bool complete = true;
    Count verify_bound = 0;
    std::size_t members_checked = 0;
    std::optional<RegularitySequence> first_uncovered;
};

/// Checks every member with total <= verify_bound, in canonical order, for a
/// covering basis element.
BasisReport verify_basis(const GeneratingSet& basis, const StructuredFamily& family, Count verify_bound);

/// Calls f on every length-(k+1) tuple with the given total, in lexicographic
/// order.
template <class F>
void for_each_tuple_with_total(int k, Count total, F&& f) {
    std::vector<Count> counts(static_cast<std::size_t>(k) + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, Count left) -> void {
        if (i + 1 == counts.size()) {
            counts[i] = left;
            f(static_cast<const std::vector<Count>&>(counts));
            return;
        }
        for (Count x = 0; x <= left; ++x) {
            counts[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, total);
}

} // namespace degseq
