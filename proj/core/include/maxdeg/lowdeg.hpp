#ifndef MAXDEG_LOWDEG_HPP
#define MAXDEG_LOWDEG_HPP

#include <vector>

#include "maxdeg/certificate.hpp"
#include "maxdeg/graph.hpp"

namespace maxdeg {

/// Equating k maximum degrees in graphs of maximum degree <= 2 costs at
/// most k-1 deletions. The procedure splits components into trivial
/// ones, cherries (K_{1,2}) and longer paths/cycles, then dominates the
/// degree-2 vertices of the latter.

struct LowDegDecomposition {
    std::vector<std::vector<int>> trivial;   // isolated vertices and edges
    std::vector<std::vector<int>> cherries;  // K_{1,2} components
    std::vector<std::vector<int>> larger;    // everything else
    int t = 0;                               // number of cherries
    int n0 = 0, n1 = 0, n2 = 0;              // degree-0/1/2 vertex counts of g
    std::vector<int> f_vertices;             // degree-2 vertices of larger components
    std::vector<int> dominating;             // min dominating set of the subgraph they induce
};

/// Requires max_degree(g) <= 2 (std::invalid_argument otherwise).
/// The degree-2 vertices of each larger component induce a path or a
/// cycle, so `dominating` comes from min_dominating_paths_cycles.
LowDegDecomposition decompose_deg2(const Graph& g);

/// Exact minimum dominating set of a disjoint union of paths and
/// cycles: ceil(len/3) per component, every third vertex. Paths are
/// traversed from their smallest-id endpoint, cycles from their
/// smallest-id vertex toward its smaller neighbor. Throws on any
/// degree-3 vertex.
std::vector<int> min_dominating_paths_cycles(const Graph& g);

/// Certificate with |deleted| <= k-1 equating k maximum degrees in a
/// graph of maximum degree <= 2 (k >= 2). Branches:
///   - k degree-2 vertices already present: delete nothing;
///   - more than floor((k-1)/2) cherries: delete every degree-2 vertex
///     of the larger components plus one leaf per cherry, leaving >= k
///     degree-1 vertices;
///   - otherwise delete the dominating set, then either one leaf per
///     cherry (enough degree-1 vertices arise) or one endpoint per
///     residual isolated edge plus every cherry center (everything drops
///     to degree 0).
/// Inputs with max degree <= 1 skip straight to the endpoint-deletion
/// finish and cost at most floor((k-1)/2).
Certificate equate_deg2(const Graph& g, int k);

} // namespace maxdeg

#endif // MAXDEG_LOWDEG_HPP
