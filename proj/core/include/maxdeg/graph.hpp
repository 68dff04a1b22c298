#ifndef MAXDEG_GRAPH_HPP
#define MAXDEG_GRAPH_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maxdeg {

/// Simple undirected graph on vertices 0..n-1, stored as sorted
/// per-vertex neighbor lists. No self-loops, no parallel edges.
/// Immutable after construction; all operations below are pure
/// functions returning new values, so Graph is safe to share across
/// threads without locking.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Graph from an edge list. Throws std::invalid_argument on
    /// self-loops, duplicate edges or out-of-range endpoints.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    long long edge_count() const noexcept { return edge_count_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// Max / min degree; 0 on the empty graph.
    int max_degree() const;
    int min_degree() const;

    /// All edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

/// Degree data of a graph: the per-vertex degrees, the non-increasing
/// degree sequence, its two leading entries d1 >= d2 and their gap.
/// d1 is -1 when the graph is empty and d2 is -1 when it has fewer than
/// two vertices; diff is 0 in those cases.
struct DegreeView {
    std::vector<int> degrees;
    std::vector<int> sorted;
    int d1 = -1;
    int d2 = -1;
    int diff = 0;
};

DegreeView degree_view(const Graph& g);

/// Result of deleting a vertex set: the induced subgraph on the
/// remaining vertices, relabeled densely, plus the map from new ids
/// back to ids in the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;
};

/// Induced subgraph on V(g) minus drop. Throws std::invalid_argument on
/// out-of-range ids; duplicates in drop are tolerated.
InducedSubgraph delete_vertices(const Graph& g, std::span<const int> drop);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

/// True iff g is acyclic.
bool is_forest(const Graph& g);

/// Re-checks the representation invariants (sorted adjacency, symmetry,
/// no loops, consistent edge count). Construction enforces them already;
/// tests run this over generated corpora. Returns false and fills `why`
/// (when given) on the first violation.
bool check_graph(const Graph& g, std::string* why = nullptr);

// Small builders used by generators and tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

/// Disjoint union; vertex ids of parts are shifted in the order given.
Graph disjoint_union(const std::vector<Graph>& parts);

} // namespace maxdeg

#endif // MAXDEG_GRAPH_HPP
