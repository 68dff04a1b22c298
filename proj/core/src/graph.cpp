#include "maxdeg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace maxdeg {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge in edge list");
    }
    edge_count_ = static_cast<long long>(edges.size());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = vertex_count();
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeView degree_view(const Graph& g) {
    DegreeView view;
    const int n = g.vertex_count();
    view.degrees.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) view.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    view.sorted = view.degrees;
    std::sort(view.sorted.begin(), view.sorted.end(), std::greater<int>());
    if (n >= 1) view.d1 = view.sorted[0];
    if (n >= 2) {
        view.d2 = view.sorted[1];
        view.diff = view.d1 - view.d2;
    }
    return view;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const int> drop) {
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (int v : drop) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("deleted vertex out of range: " + std::to_string(v));
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> new_id(static_cast<std::size_t>(n), -1);
    InducedSubgraph out;
    for (int v = 0; v < n; ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        new_id[static_cast<std::size_t>(v)] = static_cast<int>(out.original_ids.size());
        out.original_ids.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        if (gone[static_cast<std::size_t>(u)]) continue;
        for (int v : g.neighbors(u))
            if (u < v && !gone[static_cast<std::size_t>(v)])
                edges.emplace_back(new_id[static_cast<std::size_t>(u)],
                                   new_id[static_cast<std::size_t>(v)]);
    }
    out.graph = Graph(static_cast<int>(out.original_ids.size()), edges);
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_forest(const Graph& g) {
    // acyclic iff every component has edges = vertices - 1
    return g.edge_count() == g.vertex_count() - static_cast<long long>(components(g).size());
}

bool check_graph(const Graph& g, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = g.vertex_count();
    long long degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        degree_sum += static_cast<long long>(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int w = nb[i];
            if (w < 0 || w >= n) return fail("neighbor out of range");
            if (w == v) return fail("self-loop at " + std::to_string(v));
            if (i > 0 && nb[i - 1] >= w) return fail("adjacency not sorted/unique");
            if (!g.has_edge(w, v)) return fail("asymmetric edge " + std::to_string(v) + "-" + std::to_string(w));
        }
    }
    if (degree_sum != 2 * g.edge_count()) return fail("edge count inconsistent with degrees");
    return true;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("negative leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const Graph& part : parts) {
        for (auto [u, v] : part.edges()) edges.emplace_back(u + n, v + n);
        n += part.vertex_count();
    }
    return Graph(n, edges);
}

} // namespace maxdeg
