#pragma once

#include "degseq/graph.hpp"
#include "degseq/sequences.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace degseq {

/// A member all of whose vertices have degree `degree`, of minimal size.
struct GroundElement {
    int degree = 0;
    Count size = 0;
    Realization witness;
};

inline constexpr std::size_t kDefaultSplitCap = 10'000'000;
inline constexpr Count kDefaultGroundSearchCap = 4096;

/// Descriptor for a class of finite structures closed under disjoint union,
/// seen through its regularity sequences. Third-party families plug in by
/// supplying a membership oracle and a realizer; the ground provider defaults
/// to an increasing search over the membership oracle.
class StructuredFamily {
public:
    using Membership = std::function<bool(const RegularitySequence&)>;
    using Realizer = std::function<Realization(const RegularitySequence&)>;
    using GroundProvider = std::function<GroundElement(int)>;

    StructuredFamily(std::string name, Membership membership, Realizer realizer,
                     Count ground_search_cap = kDefaultGroundSearchCap);
    StructuredFamily(std::string name, Membership membership, Realizer realizer, GroundProvider ground);

    const std::string& name() const noexcept { return name_; }
    bool is_member(const RegularitySequence& r) const;
    /// Throws NotMember when the membership oracle rejects r.
    Realization realize(const RegularitySequence& r) const;
    GroundElement ground(int degree) const;

private:
    std::string name_;
    Membership membership_;
    Realizer realizer_;
    GroundProvider ground_; // empty: increasing search
    Count ground_search_cap_ = kDefaultGroundSearchCap;
};

/// Erdos-Gallai on the expanded degree sequence.
bool graph_is_member(const RegularitySequence& r);

/// Side split of a regularity sequence into two Gale-Ryser-compatible degree
/// lists. Isolated vertices all go to side A.
struct SideSplit {
    DegreeSequence a;
    DegreeSequence b;
};

/// First passing side split in enumeration order, or nullopt when none
/// exists. Throws SplitSpaceExceeded after testing more than split_cap
/// balanced splits.
std::optional<SideSplit> find_bipartite_split(const RegularitySequence& r,
                                              std::size_t split_cap = kDefaultSplitCap);

bool bipartite_is_member(const RegularitySequence& r, std::size_t split_cap = kDefaultSplitCap);

/// Increasing search for the smallest t with t*e_degree a member.
GroundElement ground_element(const StructuredFamily& family, int degree);

/// Realizes r through family's realizer. Throws NotMember.
Realization realize_member(const StructuredFamily& family, const RegularitySequence& r);

StructuredFamily graph_family();
StructuredFamily bipartite_family(std::size_t split_cap = kDefaultSplitCap);

/// "graph" or "bipartite"; throws std::invalid_argument otherwise.
StructuredFamily family_by_name(const std::string& name, std::size_t split_cap = kDefaultSplitCap);

} // namespace degseq
