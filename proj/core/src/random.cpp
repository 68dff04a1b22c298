#include "maxdeg/random.hpp"

#include <cmath>
#include <stdexcept>

namespace maxdeg {

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
    std::mt19937_64 rng(seed);
    const bool always = p >= 1.0;
    // ldexp is an exact power-of-two scaling, so the threshold is portable.
    const std::uint64_t threshold =
        p <= 0.0 ? 0 : (always ? 0 : static_cast<std::uint64_t>(std::ldexp(p, 64)));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t draw = rng();
            if (always || draw < threshold) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph random_forest(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    // pool holds each attached vertex once per incident edge plus once
    // for itself, so sampling it is degree+1-weighted
    std::vector<int> pool;
    if (n > 0) pool.push_back(0);
    for (int v = 1; v < n; ++v) {
        double r = next_unit(rng);
        if (r < 0.12) {
            pool.push_back(v);
            continue;
        }
        int parent;
        if (r < 0.56) {
            parent = static_cast<int>(next_below(rng, static_cast<std::uint64_t>(v)));
        } else {
            parent = pool[next_below(rng, pool.size())];
        }
        edges.emplace_back(parent, v);
        pool.push_back(parent);
        pool.push_back(v);
    }
    return Graph(n, edges);
}

} // namespace maxdeg
