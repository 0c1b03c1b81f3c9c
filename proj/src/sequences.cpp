#include "degseq/sequences.hpp"

#include "degseq/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d < 0; }))
        throw std::invalid_argument("degree sequence entries must be nonnegative");
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeSequence::DegreeSequence(std::initializer_list<int> degrees)
    : DegreeSequence(std::vector<int>(degrees)) {}

Count DegreeSequence::sum() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), Count{0});
}

RegularitySequence::RegularitySequence(int k) {
    if (k < 0)
        throw std::invalid_argument("degree cap must be nonnegative");
    counts_.assign(static_cast<std::size_t>(k) + 1, 0);
}

RegularitySequence::RegularitySequence(std::vector<Count> counts) : counts_(std::move(counts)) {
    if (counts_.empty())
        throw std::invalid_argument("regularity sequence needs at least the degree-0 coordinate");
    if (std::any_of(counts_.begin(), counts_.end(), [](Count c) { return c < 0; }))
        throw std::invalid_argument("regularity sequence entries must be nonnegative");
}

RegularitySequence::RegularitySequence(std::initializer_list<Count> counts)
    : RegularitySequence(std::vector<Count>(counts)) {}

Count RegularitySequence::total() const {
    Count s = 0;
    for (Count c : counts_)
        s = checked_add(s, c);
    return s;
}

Count RegularitySequence::degree_sum() const {
    Count s = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        s = checked_add(s, checked_mul(static_cast<Count>(i), counts_[i]));
    return s;
}

bool RegularitySequence::is_zero() const noexcept {
    return std::all_of(counts_.begin(), counts_.end(), [](Count c) { return c == 0; });
}

std::vector<int> RegularitySequence::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] > 0)
            s.push_back(static_cast<int>(i));
    return s;
}

bool canonical_less(const RegularitySequence& a, const RegularitySequence& b) {
    const Count ta = a.total(), tb = b.total();
    if (ta != tb)
        return ta < tb;
    return a.counts() < b.counts();
}

bool leq(const RegularitySequence& a, const RegularitySequence& b) {
    if (a.k() != b.k())
        throw CapMismatch(a.k(), b.k());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

RegularitySequence degree_to_regularity(const DegreeSequence& d, int k) {
    if (k < 0)
        throw std::invalid_argument("degree cap must be nonnegative");
    std::vector<Count> counts(static_cast<std::size_t>(k) + 1, 0);
    for (int deg : d) {
        if (deg > k)
            throw DegreeExceedsCap(deg, k);
        ++counts[static_cast<std::size_t>(deg)];
    }
    return RegularitySequence(std::move(counts));
}

DegreeSequence regularity_to_degree(const RegularitySequence& r) {
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(r.total()));
    for (int i = r.k(); i >= 0; --i)
        degrees.insert(degrees.end(), static_cast<std::size_t>(r[static_cast<std::size_t>(i)]), i);
    return DegreeSequence(std::move(degrees));
}

RegularitySequence add_regularity(const RegularitySequence& a, const RegularitySequence& b) {
    if (a.k() != b.k())
        throw CapMismatch(a.k(), b.k());
    std::vector<Count> counts(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        counts[i] = checked_add(a[i], b[i]);
    return RegularitySequence(std::move(counts));
}

Count checked_add(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out))
        throw CountOverflow();
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out;
    if (__builtin_mul_overflow(a, b, &out))
        throw CountOverflow();
    return out;
}

namespace {

template <class Range>
std::string join(const Range& r) {
    std::string s = "(";
    bool first = true;
    for (const auto& v : r) {
        if (!first)
            s += ',';
        s += std::to_string(v);
        first = false;
    }
    return s + ')';
}

} // namespace

std::string to_string(const DegreeSequence& d) { return join(d.degrees()); }
std::string to_string(const RegularitySequence& r) { return join(r.counts()); }

std::ostream& operator<<(std::ostream& os, const DegreeSequence& d) { return os << to_string(d); }
std::ostream& operator<<(std::ostream& os, const RegularitySequence& r) { return os << to_string(r); }

} // namespace degseq
