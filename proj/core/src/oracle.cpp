#include "maxdeg/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "maxdeg/errors.hpp"

namespace maxdeg {

namespace {

void check_guard(const Graph& g, int k, int max_n, const char* what) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (g.vertex_count() > max_n)
        throw guard_error(std::string(what) + ": n = " + std::to_string(g.vertex_count()) +
                          " exceeds the guard " + std::to_string(max_n));
    if (g.vertex_count() > 63)
        throw guard_error(std::string(what) + ": bitmask enumeration is limited to 63 vertices");
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    return adj;
}

/// >= k alive vertices attain the maximum degree of the induced subgraph.
bool k_at_max(const std::vector<std::uint64_t>& adj, std::uint64_t alive, int k) {
    int best = -1, count = 0;
    for (std::uint64_t rest = alive; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int d = std::popcount(adj[static_cast<std::size_t>(v)] & alive);
        if (d > best) {
            best = d;
            count = 1;
        } else if (d == best) {
            ++count;
        }
    }
    return count >= k;
}

} // namespace

BruteResult brute_fk(const Graph& g, int k, int max_n) {
    check_guard(g, k, max_n, "brute_fk");
    const int n = g.vertex_count();
    const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    const auto adj = adjacency_masks(g);

    auto qualifies = [&](std::uint64_t alive) {
        if (std::popcount(alive) < k) return true;
        return k_at_max(adj, alive, k);
    };

    // sizes ascending, sets of one size in lexicographic order; the
    // first hit is the minimum and its certificate is deterministic
    std::vector<int> comb;
    for (int d = 0; d <= n; ++d) {
        comb.resize(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int c : comb) mask |= std::uint64_t{1} << c;
            if (qualifies(full & ~mask))
                return {d, make_certificate(g, k, comb)};
            int i = d - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - d + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < d; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw internal_error("brute_fk exhausted all deletion sets");   // unreachable: d = n qualifies
}

FeasibilityResult brute_feasible(const Graph& g, int k, int max_n) {
    check_guard(g, k, max_n, "brute_feasible");
    const int n = g.vertex_count();
    const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    const auto adj = adjacency_masks(g);

    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) < k) continue;
        if (k_at_max(adj, mask, k)) {
            std::vector<int> witness;
            for (std::uint64_t rest = mask; rest;) {
                witness.push_back(std::countr_zero(rest));
                rest &= rest - 1;
            }
            return {true, std::move(witness)};
        }
    }
    return {false, std::nullopt};
}

} // namespace maxdeg
