#include "maxdeg/forest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "maxdeg/errors.hpp"

namespace maxdeg {

namespace {

// cube comparisons below stay inside long long up to this order
constexpr int kCubeLimit = 2'000'000;

long long cube(long long x) { return x * x * x; }

int icbrt(long long x) {
    auto r = static_cast<long long>(std::cbrt(static_cast<double>(x)));
    while (r > 0 && cube(r) > x) --r;
    while (cube(r + 1) <= x) ++r;
    return static_cast<int>(r);
}

void require_cube_range(int n) {
    if (n > kCubeLimit)
        throw std::invalid_argument("degree-interval procedures support up to " +
                                    std::to_string(kCubeLimit) + " vertices");
}

// Working view of g minus a growing deletion set.
struct Residue {
    const Graph& g;
    std::vector<char> alive;
    std::vector<int> deg;
    int count;

    explicit Residue(const Graph& graph)
        : g(graph),
          alive(static_cast<std::size_t>(graph.vertex_count()), 1),
          deg(static_cast<std::size_t>(graph.vertex_count())),
          count(graph.vertex_count()) {
        for (int v = 0; v < graph.vertex_count(); ++v)
            deg[static_cast<std::size_t>(v)] = graph.degree(v);
    }

    void remove(int v) {
        alive[static_cast<std::size_t>(v)] = 0;
        --count;
        for (int w : g.neighbors(v))
            if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
};

} // namespace

Certificate greedy_fk(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    Residue state(g);
    std::vector<int> deleted;
    while (state.count >= k) {
        int dmax = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (state.alive[static_cast<std::size_t>(v)])
                dmax = std::max(dmax, state.deg[static_cast<std::size_t>(v)]);
        std::vector<int> at_max;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (state.alive[static_cast<std::size_t>(v)] &&
                state.deg[static_cast<std::size_t>(v)] == dmax)
                at_max.push_back(v);
        if (static_cast<int>(at_max.size()) >= k) break;
        for (int v : at_max) state.remove(v);
        deleted.insert(deleted.end(), at_max.begin(), at_max.end());
    }
    return make_certificate(g, k, std::move(deleted));
}

std::vector<int> conflict_set(const Graph& g, std::span<const int> a) {
    if (!is_forest(g)) throw std::invalid_argument("conflict sets are defined on forests");
    if (a.size() < 2) throw std::invalid_argument("need at least 2 chosen vertices");
    const int n = g.vertex_count();
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    for (int v : a) {
        if (v < 0 || v >= n) throw std::invalid_argument("chosen vertex out of range");
        if (chosen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("chosen vertices must be distinct");
        chosen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (int v : a)
        for (int w : g.neighbors(v)) ++hits[static_cast<std::size_t>(w)];
    std::vector<int> m;
    for (int v = 0; v < n; ++v)
        if (!chosen[static_cast<std::size_t>(v)] && hits[static_cast<std::size_t>(v)] >= 2)
            m.push_back(v);
    if (m.size() >= a.size())
        throw internal_error("conflict set as large as the chosen set on a forest");
    return m;
}

IntervalPartition interval_partition(const Graph& g) {
    const int n = g.vertex_count();
    require_cube_range(n);
    IntervalPartition part;
    part.n = n;
    part.w = n > 0 ? icbrt(n) : 0;
    part.buckets.resize(static_cast<std::size_t>(part.w) + 1);
    const long long top_floor = static_cast<long long>(n) * n;
    std::vector<long long> lower(static_cast<std::size_t>(part.w) + 1);
    for (int j = 0; j <= part.w; ++j) lower[static_cast<std::size_t>(j)] = cube(j) * n;
    for (int v = 0; v < n; ++v) {
        const long long d3 = cube(g.degree(v));
        if (d3 >= top_floor) {
            part.top.push_back(v);
            continue;
        }
        auto it = std::upper_bound(lower.begin(), lower.end(), d3);
        part.buckets[static_cast<std::size_t>(it - lower.begin() - 1)].push_back(v);
    }
    return part;
}

EqualizationPlan equalization_plan(const Graph& g, std::vector<int> chosen) {
    std::sort(chosen.begin(), chosen.end(), [&](int x, int y) {
        if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
        return x < y;
    });
    EqualizationPlan plan;
    plan.conflict = conflict_set(g, chosen);   // validates forest + chosen set
    plan.chosen = std::move(chosen);

    const int n = g.vertex_count();
    std::vector<char> excluded(static_cast<std::size_t>(n), 0);
    for (int v : plan.chosen) excluded[static_cast<std::size_t>(v)] = 1;
    for (int v : plan.conflict) excluded[static_cast<std::size_t>(v)] = 1;

    const int low = g.degree(plan.chosen.back());
    for (int v : plan.chosen) {
        std::vector<int> priv;
        for (int w : g.neighbors(v))
            if (!excluded[static_cast<std::size_t>(w)]) priv.push_back(w);
        plan.private_neighbors.push_back(std::move(priv));
        plan.deficits.push_back(g.degree(v) - low);
    }
    return plan;
}

Certificate forest_fk(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (!is_forest(g)) throw std::invalid_argument("forest_fk needs a forest");
    const int n = g.vertex_count();
    require_cube_range(n);
    const int w = n > 0 ? icbrt(n) : 0;
    if (w < 2 * k - 1)
        throw std::invalid_argument("forest too small: need floor(n^(1/3)) >= 2k-1, have " +
                                    std::to_string(w));

    const long long top_floor = static_cast<long long>(n) * n;
    std::vector<long long> lower(static_cast<std::size_t>(w) + 1);
    for (int j = 0; j <= w; ++j) lower[static_cast<std::size_t>(j)] = cube(j) * n;
    auto bucket_of = [&](int d) {
        auto it = std::upper_bound(lower.begin(), lower.end(), cube(d));
        return static_cast<int>(it - lower.begin()) - 1;
    };

    Residue state(g);
    std::vector<int> deleted;

    // top interval first; on a forest it holds at most w vertices
    std::vector<int> top;
    for (int v = 0; v < n; ++v)
        if (cube(state.deg[static_cast<std::size_t>(v)]) >= top_floor) top.push_back(v);
    if (static_cast<int>(top.size()) > w)
        throw internal_error("top degree interval larger than floor(n^(1/3))");
    for (int v : top) state.remove(v);
    deleted.insert(deleted.end(), top.begin(), top.end());

    // peel the highest nonempty bucket until one with index >= 1 holds k
    // vertices (equalize those) or only bucket 0 is left (greedy finish);
    // degrees only fall, so that index strictly decreases every round
    while (true) {
        int jtop = 0;
        std::vector<int> members;
        for (int v = 0; v < n; ++v) {
            if (!state.alive[static_cast<std::size_t>(v)]) continue;
            int j = bucket_of(state.deg[static_cast<std::size_t>(v)]);
            if (j < 1 || j < jtop) continue;
            if (j > jtop) {
                jtop = j;
                members.clear();
            }
            members.push_back(v);
        }

        if (jtop == 0) {
            // only low degrees remain, max degree <= w
            InducedSubgraph stage = delete_vertices(g, deleted);
            Certificate tail = greedy_fk(stage.graph, k);
            for (int v : tail.deleted)
                deleted.push_back(stage.original_ids[static_cast<std::size_t>(v)]);
            return make_certificate(g, k, std::move(deleted));
        }

        if (static_cast<int>(members.size()) < k) {
            for (int v : members) state.remove(v);
            deleted.insert(deleted.end(), members.begin(), members.end());
            continue;
        }

        // bucket jtop holds k vertices of the highest remaining degrees:
        // equalize the k largest of them onto the smallest via private
        // neighbors, which touches no other chosen degree
        InducedSubgraph stage = delete_vertices(g, deleted);
        std::vector<int> stage_id(static_cast<std::size_t>(n), -1);
        for (int s = 0; s < stage.graph.vertex_count(); ++s)
            stage_id[static_cast<std::size_t>(stage.original_ids[static_cast<std::size_t>(s)])] = s;

        std::vector<int> candidates;
        for (int v : members) candidates.push_back(stage_id[static_cast<std::size_t>(v)]);
        std::sort(candidates.begin(), candidates.end(), [&](int x, int y) {
            if (stage.graph.degree(x) != stage.graph.degree(y))
                return stage.graph.degree(x) > stage.graph.degree(y);
            return x < y;
        });
        candidates.resize(static_cast<std::size_t>(k));

        EqualizationPlan plan = equalization_plan(stage.graph, candidates);
        for (std::size_t i = 0; i < plan.chosen.size(); ++i) {
            const int need = plan.deficits[i];
            if (static_cast<int>(plan.private_neighbors[i].size()) < need)
                throw internal_error("not enough private neighbors to equalize");
            for (int j = 0; j < need; ++j) {
                int orig = stage.original_ids[static_cast<std::size_t>(plan.private_neighbors[i][static_cast<std::size_t>(j)])];
                deleted.push_back(orig);
            }
        }
        return make_certificate(g, k, std::move(deleted));
    }
}

} // namespace maxdeg
