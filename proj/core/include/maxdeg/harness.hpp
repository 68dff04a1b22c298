#ifndef MAXDEG_HARNESS_HPP
#define MAXDEG_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

/// Data-driven verification sweeps. Each suite runs a fixed or seeded
/// case list and reports failures individually; an empty failure list
/// means every claimed bound held. Suites are deterministic given
/// (seed, samples) and case ids are stable, so reports diff cleanly.

struct SuiteFailure {
    std::string case_id;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    long long cases = 0;
    std::vector<SuiteFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Named suites, in the order `suite_names` reports them. samples = -1
// picks each suite's documented default.
SuiteReport run_oracle_equivalence(std::uint64_t seed, long long samples);  // default 0 extra random cases
SuiteReport run_sharpness_delta();                                          // delta = 2..45
SuiteReport run_sharpness_n();                                              // n = 4..23
SuiteReport run_trees();                                                    // t = 0..6
SuiteReport run_forest_bound(std::uint64_t seed, long long samples);        // default 100 per k in {2,3}
SuiteReport run_small_forest_prop(std::uint64_t seed, long long samples);   // default 10000 forests, n <= 13
SuiteReport run_lowdeg(std::uint64_t seed, long long samples);              // default 1000 random graphs
SuiteReport run_feasibility(std::uint64_t seed, long long samples);         // default 500 per k = 2..5
SuiteReport run_sparse(std::uint64_t seed, long long samples);              // default 1000 random graphs

/// Exhaustive n = 6 sweep of f_k <= (k-1) * max degree, k = 2, 3, 4.
/// Not exposed as a CLI suite; the acceptance runner calls it directly.
SuiteReport run_lemma_bound_sweep();

/// Dispatch by suite name (oracle-equivalence, sharpness-delta,
/// sharpness-n, trees, forest-bound, prop32, lowdeg, feasibility,
/// sparse). Throws std::invalid_argument on unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 1,
                      long long samples = -1);

std::vector<std::string> suite_names();

/// Random disjoint union of paths, cycles and isolated vertices on
/// exactly n vertices (max degree <= 2), or of edges and isolated
/// vertices when max_degree is 1. Deterministic in seed.
Graph random_low_degree_graph(int n, int max_degree, std::uint64_t seed);

/// Exhaustive labeled-graph corpus on n vertices: graph number `index`
/// (0 <= index < 2^C(n,2)) maps its bits to vertex pairs in row-major
/// order. Guarded to n <= 8.
Graph labeled_graph(int n, std::uint64_t index);

} // namespace maxdeg

#endif // MAXDEG_HARNESS_HPP
