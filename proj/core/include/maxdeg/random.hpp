#ifndef MAXDEG_RANDOM_HPP
#define MAXDEG_RANDOM_HPP

#include <cstdint>
#include <random>

#include "maxdeg/graph.hpp"

namespace maxdeg {

/// Deterministic RNG helpers. All generators below use std::mt19937_64
/// (whose output sequence is fixed by the standard) together with the
/// two mappings here, so corpora are reproducible bit-for-bit across
/// platforms and implementations. std::uniform_*_distribution is
/// avoided on purpose: its output is implementation-defined.

/// Uniform double in [0, 1): top 53 bits of one engine draw.
inline double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform-ish integer in [0, m): plain modulo of one engine draw.
/// The modulo bias is irrelevant at the sizes used here and keeps the
/// mapping portable.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t m) {
    return rng() % m;
}

/// G(n, p): each pair (u, v), u < v, visited in row-major order, is an
/// edge iff one engine draw is < floor(p * 2^64). Exactly one draw per
/// pair regardless of p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random forest by sequential attachment: vertex v >= 1 starts a new
/// tree with probability 0.12, otherwise attaches to an earlier vertex
/// chosen uniformly (probability 0.44) or proportionally to degree+1
/// (probability 0.44). The skewed-degree branch produces the high-degree
/// hubs that exercise degree-interval procedures.
Graph random_forest(int n, std::uint64_t seed);

} // namespace maxdeg

#endif // MAXDEG_RANDOM_HPP
