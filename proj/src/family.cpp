#include "degseq/family.hpp"

#include "degseq/error.hpp"

#include <stdexcept>

namespace degseq {

namespace {

GroundElement search_ground(const StructuredFamily& family, int degree, Count cap) {
    if (degree < 0)
        throw std::invalid_argument("ground element degree must be nonnegative");
    for (Count t = 1; t <= cap; ++t) {
        std::vector<Count> counts(static_cast<std::size_t>(degree) + 1, 0);
        counts.back() = t;
        RegularitySequence r(std::move(counts));
        if (family.is_member(r))
            return GroundElement{degree, t, family.realize(r)};
    }
    throw NoRegularFound(degree, cap);
}

// Gale-Ryser on count vectors: a[i] side-A and b[i] side-B vertices of degree
// i (i >= 1), equal degree sums assumed. For p >= k the right-hand side is
// the whole B degree sum, so only p < k can fail.
bool gale_ryser_counts(const std::vector<Count>& a, const std::vector<Count>& b) {
    const int k = static_cast<int>(a.size()) - 1;
    for (int p = 1; p < k; ++p) {
        Count lhs = 0;
        Count taken = 0;
        for (int i = k; i >= 1 && taken < p; --i) {
            const Count use = std::min<Count>(a[static_cast<std::size_t>(i)], p - taken);
            lhs += use * i;
            taken += use;
        }
        Count rhs = 0;
        for (int i = 1; i <= k; ++i)
            rhs += b[static_cast<std::size_t>(i)] * std::min(i, p);
        if (lhs > rhs)
            return false;
    }
    return true;
}

} // namespace

StructuredFamily::StructuredFamily(std::string name, Membership membership, Realizer realizer,
                                   Count ground_search_cap)
    : name_(std::move(name)), membership_(std::move(membership)), realizer_(std::move(realizer)),
      ground_search_cap_(ground_search_cap) {}

StructuredFamily::StructuredFamily(std::string name, Membership membership, Realizer realizer,
                                   GroundProvider ground)
    : name_(std::move(name)), membership_(std::move(membership)), realizer_(std::move(realizer)),
      ground_(std::move(ground)) {}

bool StructuredFamily::is_member(const RegularitySequence& r) const {
    return r.is_zero() || membership_(r);
}

Realization StructuredFamily::realize(const RegularitySequence& r) const {
    if (!is_member(r))
        throw NotMember(to_string(r));
    return realizer_(r);
}

GroundElement StructuredFamily::ground(int degree) const {
    return ground_ ? ground_(degree) : search_ground(*this, degree, ground_search_cap_);
}

bool graph_is_member(const RegularitySequence& r) { return is_graphic(regularity_to_degree(r)); }

std::optional<SideSplit> find_bipartite_split(const RegularitySequence& r, std::size_t split_cap) {
    const int k = r.k();
    const Count sum = r.degree_sum();
    if (sum % 2 != 0)
        return std::nullopt;
    const Count half = sum / 2;

    std::vector<int> active; // degrees >= 1 present in r, highest first
    for (int i = k; i >= 1; --i)
        if (r[static_cast<std::size_t>(i)] > 0)
            active.push_back(i);

    std::vector<Count> a(r.size(), 0), b(r.size(), 0);
    auto make_split = [&]() {
        std::vector<int> da(static_cast<std::size_t>(r[0]), 0), db;
        for (int i = 1; i <= k; ++i) {
            da.insert(da.end(), static_cast<std::size_t>(a[static_cast<std::size_t>(i)]), i);
            db.insert(db.end(), static_cast<std::size_t>(b[static_cast<std::size_t>(i)]), i);
        }
        return SideSplit{DegreeSequence(std::move(da)), DegreeSequence(std::move(db))};
    };
    if (active.empty())
        return make_split();

    // remaining_max[j] = largest side-A degree sum obtainable from active[j..]
    std::vector<Count> remaining_max(active.size() + 1, 0);
    for (std::size_t j = active.size(); j-- > 0;)
        remaining_max[j] = remaining_max[j + 1] + active[j] * r[static_cast<std::size_t>(active[j])];

    std::size_t tested = 0;
    bool found = false;
    // Coordinates are fixed highest degree first with side-A counts ascending;
    // the last active coordinate is solved from the balance equation. The top
    // coordinate is limited to at most half its count: swapping the two sides
    // maps every other split onto one of these.
    auto recurse = [&](auto&& self, std::size_t j, Count partial) -> void {
        const int deg = active[j];
        const Count avail = r[static_cast<std::size_t>(deg)];
        if (j + 1 == active.size()) {
            const Count need = half - partial;
            if (need < 0 || need % deg != 0 || need / deg > avail)
                return;
            a[static_cast<std::size_t>(deg)] = need / deg;
            b[static_cast<std::size_t>(deg)] = avail - need / deg;
            if (++tested > split_cap)
                throw SplitSpaceExceeded(split_cap);
            found = gale_ryser_counts(a, b);
            return;
        }
        const Count limit = j == 0 ? avail / 2 : avail;
        for (Count x = 0; x <= limit && !found; ++x) {
            const Count p = partial + x * deg;
            if (p > half)
                break;
            if (p + remaining_max[j + 1] < half)
                continue;
            a[static_cast<std::size_t>(deg)] = x;
            b[static_cast<std::size_t>(deg)] = avail - x;
            self(self, j + 1, p);
        }
    };
    recurse(recurse, 0, 0);
    if (!found)
        return std::nullopt;
    return make_split();
}

bool bipartite_is_member(const RegularitySequence& r, std::size_t split_cap) {
    return find_bipartite_split(r, split_cap).has_value();
}

GroundElement ground_element(const StructuredFamily& family, int degree) { return family.ground(degree); }

Realization realize_member(const StructuredFamily& family, const RegularitySequence& r) {
    return family.realize(r);
}

StructuredFamily graph_family() {
    return StructuredFamily(
        "graph", [](const RegularitySequence& r) { return graph_is_member(r); },
        [](const RegularitySequence& r) { return Realization(havel_hakimi_realize(regularity_to_degree(r))); });
}

StructuredFamily bipartite_family(std::size_t split_cap) {
    return StructuredFamily(
        "bipartite", [split_cap](const RegularitySequence& r) { return bipartite_is_member(r, split_cap); },
        [split_cap](const RegularitySequence& r) {
            auto split = find_bipartite_split(r, split_cap);
            if (!split)
                throw NotMember(to_string(r));
            return Realization(bipartite_realize(split->a, split->b));
        });
}

StructuredFamily family_by_name(const std::string& name, std::size_t split_cap) {
    if (name == "graph")
        return graph_family();
    if (name == "bipartite")
        return bipartite_family(split_cap);
    throw std::invalid_argument("unknown family '" + name + "' (expected graph or bipartite)");
}

} // namespace degseq
