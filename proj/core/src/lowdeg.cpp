#include "maxdeg/lowdeg.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxdeg/errors.hpp"

namespace maxdeg {

namespace {

std::vector<int> walk_order(const Graph& g, const std::vector<int>& comp) {
    // comp is sorted; paths start at their smallest endpoint, cycles at
    // their smallest vertex stepping toward its smaller neighbor
    int start = comp[0];
    for (int v : comp)
        if (g.degree(v) <= 1) { start = v; break; }
    std::vector<int> order;
    order.reserve(comp.size());
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < static_cast<int>(comp.size())) {
        order.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev && (next == -1 || w < next)) next = w;
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

std::vector<int> min_dominating_paths_cycles(const Graph& g) {
    if (g.max_degree() > 2)
        throw std::invalid_argument("component with a degree-3 vertex is not a path or cycle");
    std::vector<int> dom;
    for (const auto& comp : components(g)) {
        const int len = static_cast<int>(comp.size());
        bool cycle = true;
        for (int v : comp)
            if (g.degree(v) <= 1) cycle = false;
        std::vector<int> order = walk_order(g, comp);
        if (cycle) {
            for (int i = 0; i < len; i += 3) dom.push_back(order[static_cast<std::size_t>(i)]);
        } else {
            for (int i = 1; i < len; i += 3) dom.push_back(order[static_cast<std::size_t>(i)]);
            if (len % 3 == 1) dom.push_back(order[static_cast<std::size_t>(len - 1)]);
        }
    }
    std::sort(dom.begin(), dom.end());
    return dom;
}

LowDegDecomposition decompose_deg2(const Graph& g) {
    if (g.max_degree() > 2) throw std::invalid_argument("maximum degree must be at most 2");
    LowDegDecomposition out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        switch (g.degree(v)) {
            case 0: ++out.n0; break;
            case 1: ++out.n1; break;
            default: ++out.n2; break;
        }
    }
    for (auto& comp : components(g)) {
        if (comp.size() <= 2) {
            out.trivial.push_back(std::move(comp));
        } else if (comp.size() == 3 && g.degree(comp[0]) + g.degree(comp[1]) + g.degree(comp[2]) == 4) {
            out.cherries.push_back(std::move(comp));   // P_3, not C_3
        } else {
            for (int v : comp)
                if (g.degree(v) == 2) out.f_vertices.push_back(v);
            out.larger.push_back(std::move(comp));
        }
    }
    out.t = static_cast<int>(out.cherries.size());
    std::sort(out.f_vertices.begin(), out.f_vertices.end());

    if (!out.f_vertices.empty()) {
        std::vector<int> rest;
        std::vector<char> keep(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int v : out.f_vertices) keep[static_cast<std::size_t>(v)] = 1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!keep[static_cast<std::size_t>(v)]) rest.push_back(v);
        InducedSubgraph f = delete_vertices(g, rest);
        for (int v : min_dominating_paths_cycles(f.graph))
            out.dominating.push_back(f.original_ids[static_cast<std::size_t>(v)]);
        std::sort(out.dominating.begin(), out.dominating.end());
    }
    return out;
}

namespace {

int cherry_center(const Graph& g, const std::vector<int>& comp) {
    for (int v : comp)
        if (g.degree(v) == 2) return v;
    throw internal_error("cherry without a degree-2 center");
}

int smallest_cherry_leaf(const Graph& g, const std::vector<int>& comp) {
    for (int v : comp)
        if (g.degree(v) == 1) return v;
    throw internal_error("cherry without leaves");
}

} // namespace

Certificate equate_deg2(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (g.max_degree() > 2) throw std::invalid_argument("maximum degree must be at most 2");
    const int n = g.vertex_count();

    int n2 = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) ++n2;
    if (n2 >= k) return make_certificate(g, k, {});

    std::vector<int> deleted;

    // one endpoint per isolated edge among the still-alive vertices;
    // afterwards everything alive has degree 0
    auto delete_edge_endpoints = [&](const std::vector<char>& alive) {
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            for (int w : g.neighbors(v)) {
                if (w < v || !alive[static_cast<std::size_t>(w)]) continue;
                int live_deg_v = 0, live_deg_w = 0;
                for (int x : g.neighbors(v))
                    if (alive[static_cast<std::size_t>(x)]) ++live_deg_v;
                for (int x : g.neighbors(w))
                    if (alive[static_cast<std::size_t>(x)]) ++live_deg_w;
                if (live_deg_v == 1 && live_deg_w == 1) deleted.push_back(v);
            }
        }
    };

    if (g.max_degree() <= 1) {
        int ones = 0;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) ++ones;
        if (ones >= k) return make_certificate(g, k, {});
        std::vector<char> alive(static_cast<std::size_t>(n), 1);
        delete_edge_endpoints(alive);
        return make_certificate(g, k, std::move(deleted));
    }

    LowDegDecomposition decomp = decompose_deg2(g);
    const int half = (k - 1) / 2;

    if (decomp.t > half) {
        // n2 <= k-1 deletions leave >= 2*(half+1) >= k degree-1 vertices
        deleted = decomp.f_vertices;
        for (const auto& comp : decomp.cherries)
            deleted.push_back(smallest_cherry_leaf(g, comp));
        return make_certificate(g, k, std::move(deleted));
    }

    deleted = decomp.dominating;

    // alive view of the cherry-free part minus the dominating set
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (const auto& comp : decomp.cherries)
        for (int v : comp) alive[static_cast<std::size_t>(v)] = 0;
    for (int v : deleted) alive[static_cast<std::size_t>(v)] = 0;

    int n1 = 0;
    for (int v = 0; v < n; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        int d = 0;
        for (int w : g.neighbors(v))
            if (alive[static_cast<std::size_t>(w)]) ++d;
        if (d == 1) ++n1;
    }

    const int needed = decomp.t == 0 ? k : k - 2 * decomp.t;
    if (n1 >= needed) {
        for (const auto& comp : decomp.cherries)
            deleted.push_back(smallest_cherry_leaf(g, comp));
        return make_certificate(g, k, std::move(deleted));
    }

    // drop everything to degree 0
    delete_edge_endpoints(alive);
    for (const auto& comp : decomp.cherries)
        deleted.push_back(cherry_center(g, comp));
    return make_certificate(g, k, std::move(deleted));
}

} // namespace maxdeg
