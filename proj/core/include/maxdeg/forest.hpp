#ifndef MAXDEG_FOREST_HPP
#define MAXDEG_FOREST_HPP

#include <span>
#include <vector>

#include "maxdeg/certificate.hpp"
#include "maxdeg/graph.hpp"

namespace maxdeg {

/// Constructive procedures that equate k maximum degrees with few
/// deletions: a greedy (k-1)*Delta bound for arbitrary graphs, and a
/// (2k-1)*floor(n^(1/3)) procedure for forests built on degree
/// intervals and private-neighbor surgery.

/// Repeatedly deletes all current maximum-degree vertices (fewer than k
/// of them each round, or we are done) until at least k vertices attain
/// the maximum degree or fewer than k vertices remain. The certificate
/// validates and |deleted| <= (k-1) * max_degree(g). Requires k >= 2.
Certificate greedy_fk(const Graph& g, int k);

/// M(A): vertices outside A with at least two neighbors in A. On a
/// forest |M(A)| < |A| always (two-neighbor witnesses would close a
/// cycle). Requires forest input and |A| >= 2.
std::vector<int> conflict_set(const Graph& g, std::span<const int> a);

/// Vertices bucketed by degree relative to n^(1/3):
///   bucket j (j < w):  j^3 * n <= d^3 < (j+1)^3 * n
///   bucket w:          w^3 * n <= d^3 < n^2
///   top:               d^3 >= n^2
/// where w = floor(n^(1/3)). All membership tests are integer-exact by
/// cubing both sides; with integer degrees the bucket-w / top boundary
/// is gap-free, so no special casing is needed.
struct IntervalPartition {
    int n = 0;
    int w = 0;
    std::vector<std::vector<int>> buckets;   // indices 0..w
    std::vector<int> top;
};

IntervalPartition interval_partition(const Graph& g);

/// Plan for lowering the degrees of k chosen vertices to the smallest
/// degree among them. For each chosen vertex v_i, private_neighbors[i]
/// holds the neighbors of v_i outside chosen + conflict -- each adjacent
/// to no other chosen vertex, so deleting deficits[i] of them lowers
/// deg(v_i) by exactly that much and touches no other chosen degree.
struct EqualizationPlan {
    std::vector<int> chosen;                          // degree desc, id asc
    std::vector<int> conflict;                        // M(chosen)
    std::vector<std::vector<int>> private_neighbors;  // per chosen vertex
    std::vector<int> deficits;                        // deg_i - deg_last
};

/// Builds the plan on a forest for an arbitrary chosen set (sorted here
/// by descending degree, then ascending id). private_neighbors sizes are
/// only guaranteed to cover deficits under forest_fk's preconditions.
EqualizationPlan equalization_plan(const Graph& g, std::vector<int> chosen);

/// The full forest procedure: delete the top-interval vertices, then
/// peel top degree buckets (each holding < k vertices) until a bucket
/// with index >= 1 holds k of them -- equalize those k via an
/// EqualizationPlan -- or only bucket 0 remains, in which case the
/// greedy procedure finishes on the low-degree residue. Certificate
/// validates and |deleted| <= (2k-1) * floor(n^(1/3)).
/// Requires a forest with floor(n^(1/3)) >= 2k-1.
Certificate forest_fk(const Graph& g, int k);

} // namespace maxdeg

#endif // MAXDEG_FOREST_HPP
