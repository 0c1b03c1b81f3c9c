// Serial reference vs OpenMP kernel, wall time per kernel.
#include "degseq/semigroup.hpp"
#include "degseq/testkit.hpp"
#include "degseq/wqo.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace degseq;

namespace {

double time_once(const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double best_of(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i)
        best = std::min(best, time_once(f));
    return best;
}

void compare(const char* name, int reps, const std::function<void(Execution)>& kernel) {
    const double s = best_of(reps, [&] { kernel(Execution::serial); });
    const double p = best_of(reps, [&] { kernel(Execution::parallel); });
    std::printf("%-36s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name, s, p, s / p);
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    compare("generating_set graph k=5", 3, [](Execution e) { generating_set(graph_family(), 5, 30, e); });
    compare("generating_set bipartite k=3", 3, [](Execution e) { generating_set(bipartite_family(), 3, 30, e); });
    compare("graphic_degree_sequences n=7", 3, [](Execution e) { testkit::graphic_degree_sequences(7, e); });
    compare("graph_oracle_agreement n<=7", 3, [](Execution e) { testkit::graph_oracle_agreement(7, 6, e); });
    compare("rao (3,3,3,3) vs 3-regular on 8", 3, [](Execution e) {
        rao_leq_bruteforce({3, 3, 3, 3}, {3, 3, 3, 3, 3, 3, 3, 3}, kDefaultEmbeddingBudget, e);
    });
    return 0;
}
