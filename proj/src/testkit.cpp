#include "degseq/testkit.hpp"

#include "degseq/error.hpp"
#include "degseq/family.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace degseq::testkit {

namespace {

void check_cap(int n, int cap) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    if (n > cap)
        throw CapExceeded(static_cast<std::size_t>(n), static_cast<std::size_t>(cap));
}

void degrees_of(std::uint64_t mask, const std::vector<Edge>& slots, std::vector<int>& deg) {
    std::fill(deg.begin(), deg.end(), 0);
    while (mask) {
        const int e = std::countr_zero(mask);
        mask &= mask - 1;
        ++deg[static_cast<std::size_t>(slots[static_cast<std::size_t>(e)].u)];
        ++deg[static_cast<std::size_t>(slots[static_cast<std::size_t>(e)].v)];
    }
}

bool two_colorable(int n, std::uint64_t mask, const std::vector<Edge>& slots) {
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < slots.size(); ++e)
        if (mask >> e & 1) {
            nbr[static_cast<std::size_t>(slots[e].u)] |= 1u << slots[e].v;
            nbr[static_cast<std::size_t>(slots[e].v)] |= 1u << slots[e].u;
        }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0)
            continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (!(nbr[static_cast<std::size_t>(u)] >> v & 1))
                    continue;
                if (color[static_cast<std::size_t>(v)] < 0) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Collects sorted degree lists over all edge subsets, optionally only the
// 2-colorable ones. Subsets are split by vertex 0's incidence pattern (the
// low n-1 bits); each pattern is an independent unit of parallel work.
std::set<std::vector<int>> collect_degree_sequences(int n, bool bipartite_only, Execution exec) {
    const std::vector<Edge> slots = edge_slots(n);
    const int low = std::max(n - 1, 0);
    const int high = static_cast<int>(slots.size()) - low;
    const std::int64_t patterns = std::int64_t{1} << low;
    std::vector<std::set<std::vector<int>>> partial(static_cast<std::size_t>(patterns));

    auto scan = [&](std::int64_t p) {
        std::vector<int> deg(static_cast<std::size_t>(n));
        auto& out = partial[static_cast<std::size_t>(p)];
        for (std::uint64_t q = 0; q < (std::uint64_t{1} << high); ++q) {
            const std::uint64_t mask = static_cast<std::uint64_t>(p) | q << low;
            if (bipartite_only && !two_colorable(n, mask, slots))
                continue;
            degrees_of(mask, slots, deg);
            std::vector<int> sorted = deg;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            out.insert(std::move(sorted));
        }
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t p = 0; p < patterns; ++p)
            scan(p);
    } else {
        for (std::int64_t p = 0; p < patterns; ++p)
            scan(p);
    }
    std::set<std::vector<int>> all;
    for (auto& s : partial)
        all.merge(s);
    return all;
}

bool bruteforce_realizable(const DegreeSequence& d, bool bipartite_only) {
    const int n = static_cast<int>(d.size());
    const std::vector<Edge> slots = edge_slots(n);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        degrees_of(mask, slots, deg);
        std::sort(deg.begin(), deg.end(), std::greater<>());
        if (deg == d.degrees() && (!bipartite_only || two_colorable(n, mask, slots)))
            return true;
    }
    return false;
}

} // namespace

std::vector<Edge> edge_slots(int n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    return slots;
}

Graph graph_from_mask(int n, std::uint64_t mask, const std::vector<Edge>& slots) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < slots.size(); ++e)
        if (mask >> e & 1)
            edges.push_back(slots[e]);
    return Graph(n, std::move(edges));
}

LabeledGraphs enumerate_labeled_graphs(int n, int cap) {
    check_cap(n, cap);
    return LabeledGraphs(n, edge_slots(n));
}

std::set<std::vector<int>> graphic_degree_sequences(int n, Execution exec, int cap) {
    check_cap(n, cap);
    return collect_degree_sequences(n, false, exec);
}

std::set<std::vector<int>> bipartite_degree_sequences(int n, Execution exec, int cap) {
    check_cap(n, cap);
    return collect_degree_sequences(n, true, exec);
}

bool bruteforce_is_graphic(const DegreeSequence& d, int cap) {
    check_cap(static_cast<int>(d.size()), cap);
    return bruteforce_realizable(d, false);
}

bool bruteforce_is_bipartite_graphic(const DegreeSequence& d, int cap) {
    check_cap(static_cast<int>(d.size()), cap);
    return bruteforce_realizable(d, true);
}

std::set<RegularitySequence, bool (*)(const RegularitySequence&, const RegularitySequence&)>
enumerate_graphic_regularity_sequences(int n, int k, int cap) {
    check_cap(n, cap);
    std::set<RegularitySequence, bool (*)(const RegularitySequence&, const RegularitySequence&)> out(canonical_less);
    for (const auto& deg : collect_degree_sequences(n, false, Execution::serial)) {
        if (!deg.empty() && deg.front() > k)
            continue;
        std::vector<Count> counts(static_cast<std::size_t>(k) + 1, 0);
        for (int x : deg)
            ++counts[static_cast<std::size_t>(x)];
        out.insert(RegularitySequence(std::move(counts)));
    }
    return out;
}

std::vector<Embedding> enumerate_induced_embeddings(const Graph& pattern, const Graph& host, int cap) {
    check_cap(host.n(), cap);
    std::vector<Embedding> found;
    if (pattern.n() > host.n())
        return found;
    std::vector<int> map;
    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
    std::function<void()> rec = [&] {
        if (map.size() == static_cast<std::size_t>(pattern.n())) {
            for (int u = 0; u < pattern.n(); ++u)
                for (int v = u + 1; v < pattern.n(); ++v)
                    if (pattern.has_edge(u, v) != host.has_edge(map[static_cast<std::size_t>(u)],
                                                                 map[static_cast<std::size_t>(v)]))
                        return;
            found.push_back(Embedding{map});
            return;
        }
        for (int h = 0; h < host.n(); ++h) {
            if (used[static_cast<std::size_t>(h)])
                continue;
            used[static_cast<std::size_t>(h)] = 1;
            map.push_back(h);
            rec();
            map.pop_back();
            used[static_cast<std::size_t>(h)] = 0;
        }
    };
    rec();
    return found;
}

bool bruteforce_rao_leq(const DegreeSequence& d1, const DegreeSequence& d2, int cap) {
    const int n2 = static_cast<int>(d2.size());
    const int n1 = static_cast<int>(d1.size());
    check_cap(n2, cap);
    if (n1 > n2)
        return false;
    const std::vector<Edge> slots = edge_slots(n2);
    std::vector<int> deg(static_cast<std::size_t>(n2));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        degrees_of(mask, slots, deg);
        std::vector<int> sorted = deg;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (sorted != d2.degrees())
            continue;
        for (std::uint32_t subset = 0; subset < (1u << n2); ++subset) {
            if (std::popcount(subset) != n1)
                continue;
            std::vector<int> induced(static_cast<std::size_t>(n2), 0);
            for (std::size_t e = 0; e < slots.size(); ++e)
                if ((mask >> e & 1) && (subset >> slots[e].u & 1) && (subset >> slots[e].v & 1)) {
                    ++induced[static_cast<std::size_t>(slots[e].u)];
                    ++induced[static_cast<std::size_t>(slots[e].v)];
                }
            std::vector<int> sub;
            for (int v = 0; v < n2; ++v)
                if (subset >> v & 1)
                    sub.push_back(induced[static_cast<std::size_t>(v)]);
            std::sort(sub.begin(), sub.end(), std::greater<>());
            if (sub == d1.degrees())
                return true;
        }
    }
    return false;
}

BruteforceBasis bruteforce_basis(int k, int max_n, bool bipartite) {
    std::vector<RegularitySequence> members;
    for (int n = 0; n <= max_n; ++n) {
        const auto seqs = bipartite ? bipartite_degree_sequences(n, Execution::serial, max_n)
                                    : graphic_degree_sequences(n, Execution::serial, max_n);
        for (const auto& deg : seqs) {
            if (!deg.empty() && deg.front() > k)
                continue;
            std::vector<Count> counts(static_cast<std::size_t>(k) + 1, 0);
            for (int x : deg)
                ++counts[static_cast<std::size_t>(x)];
            members.emplace_back(std::move(counts));
        }
    }
    BruteforceBasis out;
    out.modulus.assign(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& m : members) {
        const auto supp = m.support();
        if (supp.size() != 1)
            continue;
        auto& t = out.modulus[static_cast<std::size_t>(supp.front())];
        const Count v = m[static_cast<std::size_t>(supp.front())];
        if (t == 0 || v < t)
            t = v;
    }
    if (std::find(out.modulus.begin(), out.modulus.end(), 0) != out.modulus.end())
        throw Error("bruteforce_basis: max_n too small to contain every ground element");

    auto same_class = [&](const RegularitySequence& a, const RegularitySequence& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] % out.modulus[i] != b[i] % out.modulus[i])
                return false;
        return true;
    };
    for (const auto& x : members) {
        if (x.is_zero())
            continue;
        bool minimal = true;
        for (const auto& y : members)
            if (!y.is_zero() && y != x && same_class(x, y) && leq(y, x)) {
                minimal = false;
                break;
            }
        if (minimal)
            out.minima.push_back(x);
    }
    std::sort(out.minima.begin(), out.minima.end(), canonical_less);
    return out;
}

namespace {

template <class Member>
AgreementReport agreement(int max_n, int max_degree, bool bipartite, Execution exec, Member&& member) {
    AgreementReport report{max_n, max_degree, 0, 0, {}};
    for (int n = 0; n <= max_n; ++n) {
        const auto realized = collect_degree_sequences(n, bipartite, exec);
        for_each_nonincreasing(n, max_degree, [&](const std::vector<int>& d) {
            ++report.cases;
            const DegreeSequence seq(d);
            const bool oracle = realized.count(d) > 0;
            if (oracle != member(degree_to_regularity(seq, max_degree))) {
                ++report.disagreements;
                if (report.examples.size() < 10)
                    report.examples.push_back(seq);
            }
        });
    }
    return report;
}

} // namespace

AgreementReport graph_oracle_agreement(int max_n, int max_degree, Execution exec) {
    check_cap(max_n, kGraphCap);
    return agreement(max_n, max_degree, false, exec, [](const RegularitySequence& r) { return graph_is_member(r); });
}

AgreementReport bipartite_oracle_agreement(int max_n, int max_degree, Execution exec) {
    check_cap(max_n, kGraphCap);
    return agreement(max_n, max_degree, true, exec,
                     [](const RegularitySequence& r) { return bipartite_is_member(r); });
}

} // namespace degseq::testkit
