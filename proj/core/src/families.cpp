#include "maxdeg/families.hpp"

#include <stdexcept>

#include "maxdeg/bounds.hpp"

namespace maxdeg {

long long sharp_star_degree(int j) {
    if (j < 1) throw std::invalid_argument("star index must be at least 1");
    return static_cast<long long>(j + 1) * j / 2 + 1;
}

long long caterpillar_order(int t) {
    if (t < 0) throw std::invalid_argument("caterpillar parameter must be non-negative");
    long long tt = t;
    return (tt * tt * tt + 6 * tt * tt + 17 * tt + 18) / 6;
}

FamilyInstance star_union_delta(int delta) {
    if (delta < 2) throw std::invalid_argument("stars-delta needs delta >= 2");
    const auto t = static_cast<int>(bound_f_delta(delta));
    std::vector<Graph> parts;
    for (int j = 1; j < t; ++j) parts.push_back(star_graph(static_cast<int>(sharp_star_degree(j))));
    parts.push_back(star_graph(delta));
    return {"stars-delta",
            {{"delta", delta}},
            disjoint_union(parts),
            {ClaimKind::exact_f2, 2, t}};
}

FamilyInstance extremal_gn(int n) {
    if (n < 4) throw std::invalid_argument("gn needs n >= 4");
    const auto t = static_cast<int>(bound_f_n(n));
    const long long top = static_cast<long long>(t + 2) * (t + 1) / 2 + 2;
    const int core = n == top ? n - 1 : n;   // an isolated vertex fills the last slot

    // ids 0..t-1 hold the degree-shaped vertices (the dominating one
    // last among them), ids t..core-1 the shared pool
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < core; ++x)
        if (x != t - 1) edges.emplace_back(t - 1, x);
    for (int q = 1; q < t; ++q)
        for (int i = 1; i <= sharp_star_degree(q); ++i)
            edges.emplace_back(q - 1, t - 1 + i);
    return {"gn", {{"n", n}}, Graph(n, edges), {ClaimKind::exact_f2, 2, t}};
}

FamilyInstance caterpillar_T(int t) {
    if (t < 0) throw std::invalid_argument("tree-t needs t >= 0");
    const int spine = 2 * t + 3;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
    int next = spine;
    for (int j = 1; j <= t + 1; ++j) {
        const auto extra = static_cast<int>(sharp_star_degree(j)) - 2;
        for (int i = 0; i < extra; ++i) edges.emplace_back(2 * j - 1, next++);
    }
    return {"tree-t", {{"t", t}}, Graph(next, edges), {ClaimKind::exact_f2, 2, t + 1}};
}

FamilyInstance g1_extremal(int k, std::optional<int> m) {
    if (k < 3) throw std::invalid_argument("g1-extremal needs k >= 3");
    const int isolated = m.value_or(k);
    const int t = (k - 1) / 2;
    // below k-t-1 isolated vertices the shrink-below-k escape beats
    // deleting one endpoint per edge, and the claimed value is not attained
    if (isolated < k - t - 1)
        throw std::invalid_argument("g1-extremal needs m >= k - floor((k-1)/2) - 1 = " +
                                    std::to_string(k - t - 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return {"g1-extremal",
            {{"k", k}, {"m", isolated}},
            Graph(2 * t + isolated, edges),
            {ClaimKind::exact_fk, k, t}};
}

FamilyInstance g2_extremal(int k) {
    if (k < 2) throw std::invalid_argument("g2-extremal needs k >= 2");
    std::vector<Graph> parts(static_cast<std::size_t>(k - 1), star_graph(2));
    return {"g2-extremal", {{"k", k}}, disjoint_union(parts), {ClaimKind::exact_fk, k, k - 1}};
}

FamilyInstance prop44_family(int delta, int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("prop44 needs even k >= 2");
    if (delta < 2) throw std::invalid_argument("prop44 needs delta >= 2");
    const auto t = static_cast<int>(bound_f_delta(delta));
    std::vector<Graph> parts;
    for (int c = 0; c < k - 1; ++c) parts.push_back(star_graph(delta));
    for (int j = 1; j < t; ++j)
        for (int c = 0; c < k / 2; ++c)
            parts.push_back(star_graph(static_cast<int>(sharp_star_degree(j))));
    return {"prop44",
            {{"delta", delta}, {"k", k}},
            disjoint_union(parts),
            {ClaimKind::lower_bound_fk, k, g_lower_even(delta, k)}};
}

FamilyInstance h1_extremal(int k) {
    if (k < 2) throw std::invalid_argument("h1-extremal needs k >= 2");
    const int singles = k / 2;
    const int pairs = (k - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < pairs; ++i) edges.emplace_back(singles + 2 * i, singles + 2 * i + 1);
    return {"h1-extremal",
            {{"k", k}},
            Graph(singles + 2 * pairs, edges),
            {ClaimKind::not_feasible, k, 0}};
}

FamilyInstance h2_extremal(int k) {
    if (k < 2) throw std::invalid_argument("h2-extremal needs k >= 2");
    const int paths = k % 2 == 1 ? (k - 1) / 2 : (k - 2) / 2;
    std::vector<Graph> parts(static_cast<std::size_t>(paths), path_graph(4));
    if (k % 2 == 0) parts.push_back(Graph(1));
    return {"h2-extremal", {{"k", k}}, disjoint_union(parts), {ClaimKind::not_feasible, k, 0}};
}

namespace {

long long require_param(const std::optional<long long>& p, const char* family,
                        const char* name) {
    if (!p)
        throw std::invalid_argument(std::string(family) + " requires --" + name);
    return *p;
}

} // namespace

FamilyInstance make_family(const std::string& id, const FamilyParams& p) {
    if (id == "stars-delta")
        return star_union_delta(static_cast<int>(require_param(p.delta, "stars-delta", "delta")));
    if (id == "gn") return extremal_gn(static_cast<int>(require_param(p.n, "gn", "n")));
    if (id == "tree-t") return caterpillar_T(static_cast<int>(require_param(p.t, "tree-t", "t")));
    if (id == "g1-extremal") {
        std::optional<int> m;
        if (p.m) m = static_cast<int>(*p.m);
        return g1_extremal(static_cast<int>(require_param(p.k, "g1-extremal", "k")), m);
    }
    if (id == "g2-extremal")
        return g2_extremal(static_cast<int>(require_param(p.k, "g2-extremal", "k")));
    if (id == "prop44")
        return prop44_family(static_cast<int>(require_param(p.delta, "prop44", "delta")),
                             static_cast<int>(require_param(p.k, "prop44", "k")));
    if (id == "h1-extremal")
        return h1_extremal(static_cast<int>(require_param(p.k, "h1-extremal", "k")));
    if (id == "h2-extremal")
        return h2_extremal(static_cast<int>(require_param(p.k, "h2-extremal", "k")));
    throw std::invalid_argument("unknown family: " + id);
}

std::vector<std::string> family_names() {
    return {"stars-delta", "gn",     "tree-t",      "g1-extremal",
            "g2-extremal", "prop44", "h1-extremal", "h2-extremal"};
}

} // namespace maxdeg
