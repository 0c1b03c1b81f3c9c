#include "degseq/semigroup.hpp"

#include "degseq/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace degseq {

Count ResidueModulus::label_count() const {
    Count n = 1;
    for (Count x : t)
        n = checked_mul(n, x);
    return n;
}

ResidueModulus residue_modulus(const StructuredFamily& family, int k) {
    if (k < 0)
        throw std::invalid_argument("degree cap must be nonnegative");
    ResidueModulus m;
    for (int i = 0; i <= k; ++i)
        m.t.push_back(ground_element(family, i).size);
    return m;
}

ResidueLabel residue_class_of(const RegularitySequence& r, const ResidueModulus& t) {
    if (r.k() != t.k())
        throw CapMismatch(r.k(), t.k());
    ResidueLabel label;
    label.r.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        label.r.push_back(r[i] % t.t[i]);
    return label;
}

ResidueLabel label_at(Count index, const ResidueModulus& t) {
    ResidueLabel label;
    label.r.assign(t.t.size(), 0);
    for (std::size_t i = t.t.size(); i-- > 0;) {
        label.r[i] = index % t.t[i];
        index /= t.t[i];
    }
    return label;
}

Count label_index(const ResidueLabel& label, const ResidueModulus& t) {
    Count index = 0;
    for (std::size_t i = 0; i < t.t.size(); ++i)
        index = index * t.t[i] + label.r[i];
    return index;
}

RegularitySequence greedy_minimize(const RegularitySequence& r, const ResidueModulus& t,
                                   const StructuredFamily& family) {
    if (r.k() != t.k())
        throw CapMismatch(r.k(), t.k());
    if (!family.is_member(r))
        throw NotMember(to_string(r));
    std::vector<Count> m = r.counts();
    for (bool progressed = true; progressed;) {
        progressed = false;
        for (int i = r.k(); i >= 0 && !progressed; --i) {
            const auto ui = static_cast<std::size_t>(i);
            if (m[ui] < t.t[ui])
                continue;
            m[ui] -= t.t[ui];
            if (family.is_member(RegularitySequence(m)))
                progressed = true;
            else
                m[ui] += t.t[ui];
        }
    }
    return RegularitySequence(std::move(m));
}

std::vector<RegularitySequence> minimal_elements(const ResidueLabel& label, const ResidueModulus& t,
                                                 const StructuredFamily& family, Count bound) {
    if (label.r.size() != t.t.size())
        throw CapMismatch(static_cast<int>(label.r.size()) - 1, t.k());
    // All class points with total <= bound.
    std::vector<std::vector<Count>> points;
    std::vector<Count> x(label.r);
    Count base_total = 0;
    for (Count v : label.r)
        base_total += v;
    if (base_total <= bound) {
        auto rec = [&](auto&& self, std::size_t i, Count total) -> void {
            if (i == x.size()) {
                points.push_back(x);
                return;
            }
            const Count start = x[i];
            for (; total <= bound; total += t.t[i], x[i] += t.t[i])
                self(self, i + 1, total);
            x[i] = start;
        };
        rec(rec, 0, base_total);
    }
    auto sum = [](const std::vector<Count>& v) {
        Count s = 0;
        for (Count c : v)
            s += c;
        return s;
    };
    std::sort(points.begin(), points.end(), [&](const auto& a, const auto& b) {
        const Count sa = sum(a), sb = sum(b);
        return sa != sb ? sa < sb : a < b;
    });

    // A point strictly dominating a class member has a larger total, so it
    // comes later; every dominating member is itself above some minimum, so
    // testing against the minima found so far is enough.
    std::vector<RegularitySequence> minima;
    for (auto& p : points) {
        RegularitySequence cand(std::move(p));
        if (cand.is_zero())
            continue;
        const bool dominated = std::any_of(minima.begin(), minima.end(),
                                           [&](const RegularitySequence& m) { return leq(m, cand); });
        if (!dominated && family.is_member(cand))
            minima.push_back(std::move(cand));
    }
    return minima;
}

std::optional<std::size_t> GeneratingSet::find(const RegularitySequence& r) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].counts == r)
            return i;
    return std::nullopt;
}

GeneratingSet generating_set(const StructuredFamily& family, int k, Count bound, Execution exec) {
    if (bound < 1)
        throw std::invalid_argument("search bound must be positive");
    GeneratingSet gs;
    gs.family = family.name();
    gs.k = k;
    gs.bound = bound;
    gs.modulus = residue_modulus(family, k);

    const Count labels = gs.modulus.label_count();
    std::vector<std::vector<RegularitySequence>> per_label(static_cast<std::size_t>(labels));
    ExceptionSlot failure;
    auto one_label = [&](Count idx) {
        failure.run([&] {
            per_label[static_cast<std::size_t>(idx)] =
                minimal_elements(label_at(idx, gs.modulus), gs.modulus, family, bound);
        });
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (Count idx = 0; idx < labels; ++idx)
            one_label(idx);
    } else {
        for (Count idx = 0; idx < labels; ++idx)
            one_label(idx);
    }
    failure.rethrow();

    std::vector<RegularitySequence> all;
    for (Count idx = 0; idx < labels; ++idx) {
        auto& minima = per_label[static_cast<std::size_t>(idx)];
        if (minima.empty())
            continue;
        all.insert(all.end(), minima.begin(), minima.end());
        gs.classes.push_back({label_at(idx, gs.modulus), std::move(minima)});
    }
    std::sort(all.begin(), all.end(), canonical_less);

    gs.elements.resize(all.size() + 1);
    gs.elements[0] = {RegularitySequence(k), family.realize(RegularitySequence(k))};
    const auto count = static_cast<std::ptrdiff_t>(all.size());
    auto one_witness = [&](std::ptrdiff_t i) {
        failure.run([&] {
            const auto& r = all[static_cast<std::size_t>(i)];
            gs.elements[static_cast<std::size_t>(i) + 1] = {r, family.realize(r)};
        });
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i)
            one_witness(i);
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i)
            one_witness(i);
    }
    failure.rethrow();
    return gs;
}

bool is_ground(const RegularitySequence& r, const ResidueModulus& t) {
    const auto supp = r.support();
    return supp.size() == 1 && r[static_cast<std::size_t>(supp[0])] == t.t[static_cast<std::size_t>(supp[0])];
}

std::optional<std::size_t> covering_element(const GeneratingSet& basis, const RegularitySequence& r) {
    if (r.k() != basis.k)
        throw CapMismatch(r.k(), basis.k);
    const ResidueLabel label = residue_class_of(r, basis.modulus);
    std::optional<std::size_t> best;
    Count best_total = -1;
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        const auto& m = basis.elements[i].counts;
        if (is_ground(m, basis.modulus) || !leq(m, r) || residue_class_of(m, basis.modulus) != label)
            continue;
        const Count total = m.total();
        if (total > best_total) {
            best = i;
            best_total = total;
        }
    }
    return best;
}

BasisReport verify_basis(const GeneratingSet& basis, const StructuredFamily& family, Count verify_bound) {
    // Bucket the basis by residue class so each check only scans its class.
    std::map<ResidueLabel, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        by_class[residue_class_of(basis.elements[i].counts, basis.modulus)].push_back(i);

    BasisReport report;
    report.verify_bound = verify_bound;
    for (Count total = 0; total <= verify_bound && report.complete; ++total) {
        for_each_tuple_with_total(basis.k, total, [&](const std::vector<Count>& counts) {
            if (!report.complete)
                return;
            RegularitySequence r(counts);
            if (!family.is_member(r))
                return;
            ++report.members_checked;
            const auto it = by_class.find(residue_class_of(r, basis.modulus));
            const bool covered =
                it != by_class.end() && std::any_of(it->second.begin(), it->second.end(), [&](std::size_t i) {
                    return leq(basis.elements[i].counts, r);
                });
            if (!covered) {
                report.complete = false;
                report.first_uncovered = std::move(r);
            }
        });
    }
    return report;
}

} // namespace degseq
