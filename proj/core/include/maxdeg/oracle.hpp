#ifndef MAXDEG_ORACLE_HPP
#define MAXDEG_ORACLE_HPP

#include <optional>
#include <vector>

#include "maxdeg/certificate.hpp"
#include "maxdeg/graph.hpp"

namespace maxdeg {

// Exponential ground truth on small graphs. Everything faster in this
// library is validated against these two routines, so they stay as
// plain as possible: enumerate deletion sets by size, sets of one size
// in lexicographic order, and report the first hit. That order makes
// the returned certificate deterministic.

inline constexpr int kBruteFkMaxN = 16;
inline constexpr int kBruteFeasibleMaxN = 20;

struct BruteResult {
    int value = 0;
    Certificate cert;
};

/// f_k(G) by direct search: smallest d such that some d-set B leaves
/// fewer than k vertices, or leaves at least k vertices attaining the
/// maximum degree of G - B. Requires k >= 2; throws guard_error when
/// n > max_n.
BruteResult brute_fk(const Graph& g, int k, int max_n = kBruteFkMaxN);

struct FeasibilityResult {
    bool feasible = false;
    std::optional<std::vector<int>> witness;   // vertex set of a feasible H
};

/// Whether some induced subgraph H with |H| >= k has at least k vertices
/// attaining its maximum degree. Unlike f_k, shrinking below k vertices
/// does not count. Subsets are scanned in increasing bitmask order and
/// the first hit is returned as witness.
FeasibilityResult brute_feasible(const Graph& g, int k, int max_n = kBruteFeasibleMaxN);

} // namespace maxdeg

#endif // MAXDEG_ORACLE_HPP
