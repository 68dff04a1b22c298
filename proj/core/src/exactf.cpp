#include "maxdeg/exactf.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxdeg/errors.hpp"

namespace maxdeg {

std::pair<int, std::vector<int>> diff_upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("diff bound needs at least 2 vertices");
    DegreeView view = degree_view(g);
    const int diff = view.diff;
    if (diff == 0) return {0, {}};

    // diff > 0 makes the maximum-degree vertex unique
    int v = -1;
    for (int i = 0; i < n; ++i)
        if (view.degrees[static_cast<std::size_t>(i)] == view.d1) { v = i; break; }
    int u = -1;
    for (int i = 0; i < n; ++i)
        if (i != v && view.degrees[static_cast<std::size_t>(i)] == view.d2) { u = i; break; }

    // |N(v) \ (N(u) + {u})| >= d1 - d2, so the witness always fills up
    std::vector<int> witness;
    for (int w : g.neighbors(v)) {
        if (w == u || g.has_edge(u, w)) continue;
        witness.push_back(w);
        if (static_cast<int>(witness.size()) == diff) break;
    }
    if (static_cast<int>(witness.size()) != diff)
        throw internal_error("diff witness shortfall");
    return {diff, witness};
}

namespace {

// Degree buckets with swap-pop removal; one vertex deletion costs
// O(deg) plus the downward scans for the new top-two degrees, which is
// O(n) per step and O(n^2) overall.
struct DegreeBuckets {
    std::vector<int> deg;
    std::vector<char> alive;
    std::vector<std::vector<int>> bucket;
    std::vector<int> pos;
    int hi = 0;

    explicit DegreeBuckets(const Graph& g) {
        const int n = g.vertex_count();
        deg.resize(static_cast<std::size_t>(n));
        alive.assign(static_cast<std::size_t>(n), 1);
        pos.resize(static_cast<std::size_t>(n));
        bucket.resize(static_cast<std::size_t>(n));   // degrees are < n
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            deg[static_cast<std::size_t>(v)] = d;
            pos[static_cast<std::size_t>(v)] = static_cast<int>(bucket[static_cast<std::size_t>(d)].size());
            bucket[static_cast<std::size_t>(d)].push_back(v);
            hi = std::max(hi, d);
        }
    }

    void detach(int v) {
        auto& b = bucket[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])];
        int i = pos[static_cast<std::size_t>(v)];
        b[static_cast<std::size_t>(i)] = b.back();
        pos[static_cast<std::size_t>(b.back())] = i;
        b.pop_back();
    }

    void decrement(int v) {
        detach(v);
        int d = --deg[static_cast<std::size_t>(v)];
        pos[static_cast<std::size_t>(v)] = static_cast<int>(bucket[static_cast<std::size_t>(d)].size());
        bucket[static_cast<std::size_t>(d)].push_back(v);
    }
};

} // namespace

ExactF exact_f(const Graph& g) {
    const int n = g.vertex_count();
    ExactF out;
    if (n <= 1) {
        out.value = 0;
        out.cert = make_certificate(g, 2, {});
        return out;
    }

    DegreeBuckets state(g);
    for (int j = 0;; ++j) {
        while (state.bucket[static_cast<std::size_t>(state.hi)].empty()) --state.hi;
        const int d1 = state.hi;
        int second = d1;
        if (state.bucket[static_cast<std::size_t>(d1)].size() < 2) {
            --second;
            while (state.bucket[static_cast<std::size_t>(second)].empty()) --second;
        }
        const int diff = d1 - second;
        if (diff == 0) {
            // later terms are at least j+1 and cannot improve the minimum
            out.trace.steps.push_back({j, -1, d1, second, 0});
            break;
        }
        const int v = state.bucket[static_cast<std::size_t>(d1)][0];
        out.trace.steps.push_back({j, v, d1, second, diff});
        state.alive[static_cast<std::size_t>(v)] = 0;
        state.detach(v);
        for (int w : g.neighbors(v))
            if (state.alive[static_cast<std::size_t>(w)]) state.decrement(w);
    }

    out.trace.jstar = 0;
    out.trace.value = out.trace.steps[0].diff;
    for (const TraceStep& step : out.trace.steps) {
        if (step.diff + step.j < out.trace.value) {
            out.trace.value = step.diff + step.j;
            out.trace.jstar = step.j;
        }
    }
    out.value = out.trace.value;

    // certificate: the forced deletions up to the minimizing step, then
    // the diff witness inside that graph, reported in original ids
    std::vector<int> deleted;
    deleted.reserve(static_cast<std::size_t>(out.value));
    for (int j = 0; j < out.trace.jstar; ++j)
        deleted.push_back(out.trace.steps[static_cast<std::size_t>(j)].deleted_vertex);
    InducedSubgraph stage = delete_vertices(g, deleted);
    auto [bound, witness] = diff_upper_bound(stage.graph);
    if (bound + out.trace.jstar != out.value)
        throw internal_error("trace minimum does not match the stage diff");
    for (int w : witness) deleted.push_back(stage.original_ids[static_cast<std::size_t>(w)]);
    out.cert = make_certificate(g, 2, std::move(deleted));
    return out;
}

} // namespace maxdeg
