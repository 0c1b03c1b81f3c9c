#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degseq {

// Base for every failure the library reports. Callers that only care about
// "did it work" catch this; the CLI maps the subclasses to exit statuses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeExceedsCap : public Error {
public:
    DegreeExceedsCap(int degree, int cap)
        : Error("degree " + std::to_string(degree) + " exceeds cap k=" + std::to_string(cap)),
          degree(degree), cap(cap) {}
    int degree;
    int cap;
};

class CapMismatch : public Error {
public:
    CapMismatch(int lhs, int rhs)
        : Error("degree caps differ: k=" + std::to_string(lhs) + " vs k=" + std::to_string(rhs)) {}
};

class CountOverflow : public Error {
public:
    CountOverflow() : Error("count overflow") {}
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class NotGraphic : public Error {
public:
    explicit NotGraphic(std::string reason) : Error("not graphic: " + reason), reason(std::move(reason)) {}
    std::string reason;
};

class NotBigraphic : public Error {
public:
    // violated_index is the prefix length p of the first failing Gale-Ryser
    // inequality, or 0 when the two degree sums differ.
    NotBigraphic(std::size_t violated_index, std::string reason)
        : Error("not bigraphic: " + reason), violated_index(violated_index), reason(std::move(reason)) {}
    std::size_t violated_index;
    std::string reason;
};

class SearchLimitExceeded : public Error {
public:
    explicit SearchLimitExceeded(std::size_t budget)
        : Error("search budget of " + std::to_string(budget) + " node expansions exhausted"), budget(budget) {}
    std::size_t budget;
};

class SplitSpaceExceeded : public Error {
public:
    explicit SplitSpaceExceeded(std::size_t cap)
        : Error("bipartite side-split search exceeded cap of " + std::to_string(cap) + " splits"), cap(cap) {}
    std::size_t cap;
};

class NoRegularFound : public Error {
public:
    NoRegularFound(int degree, long long cap)
        : Error("no " + std::to_string(degree) + "-regular member found with at most " +
                std::to_string(cap) + " vertices") {}
};

class NotMember : public Error {
public:
    explicit NotMember(const std::string& what) : Error("not a family member: " + what) {}
};

class BasisIncomplete : public Error {
public:
    explicit BasisIncomplete(const std::string& what)
        : Error("no basis element covers " + what + " (search bound too small?)") {}
};

class CapExceeded : public Error {
public:
    CapExceeded(std::size_t n, std::size_t cap)
        : Error("size " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap)) {}
};

} // namespace degseq
