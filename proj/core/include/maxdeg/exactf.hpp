#ifndef MAXDEG_EXACTF_HPP
#define MAXDEG_EXACTF_HPP

#include <utility>
#include <vector>

#include "maxdeg/certificate.hpp"
#include "maxdeg/graph.hpp"

namespace maxdeg {

/// f(G) = f_2(G) is the minimum number of vertex deletions after which
/// at least two vertices attain the maximum degree of the remaining
/// induced subgraph (or fewer than two vertices remain).
///
/// exact_f computes it by the peel-the-unique-maximum iteration:
/// starting from G_0 = G, step j records the top-two degree gap
/// diff(G_j) = d1 - d2 and, while the gap is positive, deletes the
/// (necessarily unique) maximum-degree vertex to form G_{j+1}. Then
/// f(G) = min_j (diff(G_j) + j), and the first step with gap zero ends
/// the iteration since every later term exceeds that minimum. Total
/// cost is O(n^2) via bucketed degree maintenance.

/// One row of the deletion trace: the state of G_j plus the vertex
/// removed to form G_{j+1} (-1 on the final, gap-zero step).
struct TraceStep {
    int j = 0;
    int deleted_vertex = -1;
    int d1 = 0;
    int d2 = 0;
    int diff = 0;
};

struct DeletionTrace {
    std::vector<TraceStep> steps;
    int jstar = 0;   // first step index attaining the minimum
    int value = 0;   // min over steps of diff + j
};

struct ExactF {
    int value = 0;
    DeletionTrace trace;
    Certificate cert;   // k = 2, validates against the input graph
};

/// Upper bound f(G) <= d1 - d2 with an explicit witness: a set of
/// diff(G) neighbors of a maximum-degree vertex v, none adjacent to a
/// chosen second-degree vertex u, so deleting the set leaves both v and
/// u at the new maximum degree. Ties are broken toward smallest ids.
/// Requires n >= 2 (std::invalid_argument otherwise).
std::pair<int, std::vector<int>> diff_upper_bound(const Graph& g);

/// Exact f(G) with the full trace and a certificate assembled from the
/// minimizing step. Graphs with n <= 1 get value 0 and a small-H
/// certificate.
ExactF exact_f(const Graph& g);

} // namespace maxdeg

#endif // MAXDEG_EXACTF_HPP
