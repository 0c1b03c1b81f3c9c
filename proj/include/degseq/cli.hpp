#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace degseq::cli {

/// Exit statuses are part of the scripting contract.
enum Exit : int {
    kOk = 0,          // completed, affirmative or complete result
    kUsage = 1,       // usage or I/O error
    kNegative = 2,    // completed, negative or incomplete result
    kBudget = 3,      // a search budget or cap ran out
};

struct CommandConfig {
    std::string family = "graph";
    int k = 3;
    long long bound = 30;
    long long verify_bound = 30;
    std::size_t budget = 10'000'000;
    std::size_t split_cap = 10'000'000;
    int oracle_max_n = 7;
    std::string format = "json";
    std::string in;   // empty or "-" reads stdin
    std::string out;  // empty writes stdout
};

/// Runs one command line (args excludes the program name). Output goes to
/// `out` unless --out is given; diagnostics and warnings go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace degseq::cli
