#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace degseq {

using Count = std::int64_t;

/// Vertex degrees of a graph, kept sorted non-increasing.
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Sorts on ingestion; throws std::invalid_argument on a negative entry.
    explicit DegreeSequence(std::vector<int> degrees);
    DegreeSequence(std::initializer_list<int> degrees);

    const std::vector<int>& degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    bool empty() const noexcept { return degrees_.empty(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    int max_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }
    Count sum() const noexcept;

    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> degrees_;
};

/// counts[i] = number of vertices of degree i, for i in 0..k. The degree-0
/// coordinate is a real coordinate of the semigroup element.
class RegularitySequence {
public:
    RegularitySequence() : RegularitySequence(0) {}
    /// All-zero sequence with cap k.
    explicit RegularitySequence(int k);
    /// k is counts.size() - 1; throws std::invalid_argument when counts is
    /// empty or has a negative entry.
    explicit RegularitySequence(std::vector<Count> counts);
    RegularitySequence(std::initializer_list<Count> counts);

    int k() const noexcept { return static_cast<int>(counts_.size()) - 1; }
    const std::vector<Count>& counts() const noexcept { return counts_; }
    Count operator[](std::size_t i) const { return counts_[i]; }
    std::size_t size() const noexcept { return counts_.size(); }

    /// Number of vertices, i.e. the sum of all counts.
    Count total() const;
    /// Sum of i * counts[i].
    Count degree_sum() const;
    bool is_zero() const noexcept;
    std::vector<int> support() const;

    friend bool operator==(const RegularitySequence&, const RegularitySequence&) = default;

private:
    std::vector<Count> counts_;
};

/// Canonical order on regularity sequences: total vertex count first, then
/// lexicographic on counts.
bool canonical_less(const RegularitySequence& a, const RegularitySequence& b);

/// Componentwise a <= b. Throws CapMismatch.
bool leq(const RegularitySequence& a, const RegularitySequence& b);

RegularitySequence degree_to_regularity(const DegreeSequence& d, int k);
DegreeSequence regularity_to_degree(const RegularitySequence& r);

/// Pointwise sum. Throws CapMismatch or CountOverflow.
RegularitySequence add_regularity(const RegularitySequence& a, const RegularitySequence& b);

/// Overflow-checked helpers shared by the arithmetic in this library.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

std::string to_string(const DegreeSequence& d);
std::string to_string(const RegularitySequence& r);
std::ostream& operator<<(std::ostream& os, const DegreeSequence& d);
std::ostream& operator<<(std::ostream& os, const RegularitySequence& r);

} // namespace degseq
