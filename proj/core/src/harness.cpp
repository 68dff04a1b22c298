#include "maxdeg/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "maxdeg/bounds.hpp"
#include "maxdeg/certificate.hpp"
#include "maxdeg/exactf.hpp"
#include "maxdeg/families.hpp"
#include "maxdeg/forest.hpp"
#include "maxdeg/lowdeg.hpp"
#include "maxdeg/oracle.hpp"
#include "maxdeg/random.hpp"

namespace maxdeg {

namespace {

void expect(SuiteReport& rep, const std::string& id, bool ok, const std::string& detail) {
    ++rep.cases;
    if (!ok) rep.failures.push_back({id, detail});
}

int icbrt_int(int n) {
    int r = static_cast<int>(std::cbrt(static_cast<double>(n)));
    while (r > 0 && static_cast<long long>(r) * r * r > n) --r;
    while (static_cast<long long>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

Graph double_star(int small_side, int big_side) {
    std::vector<std::pair<int, int>> edges{{0, 1}};
    int next = 2;
    for (int i = 1; i < small_side; ++i) edges.emplace_back(0, next++);
    for (int i = 1; i < big_side; ++i) edges.emplace_back(1, next++);
    return Graph(next, edges);
}

} // namespace

Graph labeled_graph(int n, std::uint64_t index) {
    if (n < 0 || n > 8) throw std::invalid_argument("exhaustive corpus is limited to n <= 8");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((index >> bit) & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_low_degree_graph(int n, int max_degree, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (max_degree != 1 && max_degree != 2)
        throw std::invalid_argument("max_degree must be 1 or 2");
    std::mt19937_64 rng(seed);
    std::vector<Graph> parts;
    int remaining = n;
    while (remaining > 0) {
        int choice = static_cast<int>(next_below(rng, max_degree == 1 ? 2 : 3));
        if (choice == 0 || remaining < 2) {
            parts.push_back(Graph(1));
            remaining -= 1;
        } else if (choice == 1 || remaining < 3) {
            int len = max_degree == 1
                          ? 2
                          : 2 + static_cast<int>(next_below(
                                    rng, static_cast<std::uint64_t>(std::min(remaining, 8) - 1)));
            parts.push_back(path_graph(len));
            remaining -= len;
        } else {
            int len = 3 + static_cast<int>(next_below(
                              rng, static_cast<std::uint64_t>(std::min(remaining, 8) - 2)));
            parts.push_back(cycle_graph(len));
            remaining -= len;
        }
    }
    return disjoint_union(parts);
}

SuiteReport run_oracle_equivalence(std::uint64_t seed, long long samples) {
    if (samples < 0) samples = 0;
    SuiteReport rep{"oracle-equivalence", 0, {}};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
        Graph g = labeled_graph(6, mask);
        ExactF fast = exact_f(g);
        BruteResult ref = brute_fk(g, 2);
        bool ok = fast.value == ref.value && verify_certificate(g, fast.cert) &&
                  verify_certificate(g, ref.cert);
        expect(rep, "n6-" + std::to_string(mask), ok,
               "exact_f = " + std::to_string(fast.value) + ", brute = " +
                   std::to_string(ref.value));
    }
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < samples; ++i) {
        int n = 7 + static_cast<int>(next_below(rng, 4));
        double p = next_unit(rng);
        Graph g = random_graph(n, p, rng());
        ExactF fast = exact_f(g);
        BruteResult ref = brute_fk(g, 2);
        bool ok = fast.value == ref.value && verify_certificate(g, fast.cert);
        expect(rep, "rand-" + std::to_string(i), ok,
               "n = " + std::to_string(n) + ": exact_f = " + std::to_string(fast.value) +
                   ", brute = " + std::to_string(ref.value));
    }
    return rep;
}

SuiteReport run_sharpness_delta() {
    SuiteReport rep{"sharpness-delta", 0, {}};
    for (int delta = 2; delta <= 45; ++delta) {
        FamilyInstance fam = star_union_delta(delta);
        int value = exact_f(fam.graph).value;
        bool ok = value == bound_f_delta(delta) && value == fam.claim.value;
        expect(rep, "delta-" + std::to_string(delta), ok,
               "exact_f = " + std::to_string(value) + ", bound = " +
                   std::to_string(bound_f_delta(delta)));
    }
    return rep;
}

SuiteReport run_sharpness_n() {
    SuiteReport rep{"sharpness-n", 0, {}};
    for (int n = 4; n <= 23; ++n) {
        FamilyInstance fam = extremal_gn(n);
        int value = exact_f(fam.graph).value;
        bool ok = fam.graph.vertex_count() == n && value == bound_f_n(n) &&
                  value == fam.claim.value;
        expect(rep, "n-" + std::to_string(n), ok,
               "exact_f = " + std::to_string(value) + ", bound = " +
                   std::to_string(bound_f_n(n)));
    }
    return rep;
}

SuiteReport run_trees() {
    SuiteReport rep{"trees", 0, {}};
    for (int t = 0; t <= 6; ++t) {
        FamilyInstance fam = caterpillar_T(t);
        int value = exact_f(fam.graph).value;
        bool ok = fam.graph.vertex_count() == caterpillar_order(t) && value == t + 1 &&
                  is_forest(fam.graph);
        expect(rep, "t-" + std::to_string(t), ok,
               "order = " + std::to_string(fam.graph.vertex_count()) + " (want " +
                   std::to_string(caterpillar_order(t)) + "), exact_f = " +
                   std::to_string(value));
    }
    return rep;
}

SuiteReport run_forest_bound(std::uint64_t seed, long long samples) {
    if (samples < 0) samples = 100;
    SuiteReport rep{"forest-bound", 0, {}};
    std::mt19937_64 rng(seed);
    const int lo[2] = {27, 125};
    const int hi[2] = {500, 1000};
    for (int which = 0; which < 2; ++which) {
        const int k = which + 2;
        for (long long i = 0; i < samples; ++i) {
            int n = lo[which] +
                    static_cast<int>(next_below(rng, static_cast<std::uint64_t>(
                                                          hi[which] - lo[which] + 1)));
            Graph f = random_forest(n, rng());
            Certificate cert = forest_fk(f, k);
            long long budget = static_cast<long long>(2 * k - 1) * icbrt_int(n);
            bool ok = verify_certificate(f, cert) &&
                      static_cast<long long>(cert.deleted.size()) <= budget;
            expect(rep, "k" + std::to_string(k) + "-" + std::to_string(i), ok,
                   "n = " + std::to_string(n) + ": deleted " +
                       std::to_string(cert.deleted.size()) + " > budget " +
                       std::to_string(budget) + " or invalid certificate");
        }
    }
    return rep;
}

SuiteReport run_small_forest_prop(std::uint64_t seed, long long samples) {
    if (samples < 0) samples = 10000;
    SuiteReport rep{"prop32", 0, {}};
    {
        Graph named = disjoint_union({star_graph(4), star_graph(7)});
        int v = brute_fk(named, 2).value;
        expect(rep, "stars-4-7", v == 2, "f = " + std::to_string(v) + ", want 2");
        Graph ds = double_star(5, 8);
        v = brute_fk(ds, 2).value;
        expect(rep, "double-star-5-8", v == 2, "f = " + std::to_string(v) + ", want 2");
    }
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < samples; ++i) {
        int n = 1 + static_cast<int>(next_below(rng, 13));
        Graph f = random_forest(n, rng());
        int v = brute_fk(f, 2).value;
        expect(rep, "forest-" + std::to_string(i), v <= 2,
               "n = " + std::to_string(n) + ": f = " + std::to_string(v));
    }
    return rep;
}

SuiteReport run_lowdeg(std::uint64_t seed, long long samples) {
    if (samples < 0) samples = 1000;
    SuiteReport rep{"lowdeg", 0, {}};
    for (int k = 2; k <= 5; ++k) {
        FamilyInstance fam = g2_extremal(k);
        int v = brute_fk(fam.graph, k).value;
        expect(rep, "cherries-k" + std::to_string(k), v == k - 1,
               "f_k = " + std::to_string(v) + ", want " + std::to_string(k - 1));
    }
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < samples; ++i) {
        int n = 4 + static_cast<int>(next_below(rng, 13));
        int k = 2 + static_cast<int>(next_below(rng, 5));
        int md = 1 + static_cast<int>(next_below(rng, 2));
        Graph g = random_low_degree_graph(n, md, rng());
        Certificate cert = equate_deg2(g, k);
        auto used = static_cast<long long>(cert.deleted.size());
        long long cap = g.max_degree() <= 1 ? (k - 1) / 2 : k - 1;
        BruteResult ref = brute_fk(g, k);
        bool ok = verify_certificate(g, cert) && used <= cap && used >= ref.value;
        expect(rep, "rand-" + std::to_string(i), ok,
               "n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": deleted " +
                   std::to_string(used) + ", cap " + std::to_string(cap) + ", exact " +
                   std::to_string(ref.value));
    }
    return rep;
}

SuiteReport run_feasibility(std::uint64_t seed, long long samples) {
    if (samples < 0) samples = 500;
    SuiteReport rep{"feasibility", 0, {}};
    for (int k = 2; k <= 6; ++k) {
        for (const FamilyInstance& fam : {h1_extremal(k), h2_extremal(k)}) {
            FeasibilityResult res = brute_feasible(fam.graph, k);
            expect(rep, fam.family + "-k" + std::to_string(k), !res.feasible,
                   "expected non-" + std::to_string(k) + "-feasible");
        }
    }
    std::mt19937_64 rng(seed);
    for (int k = 2; k <= 5; ++k) {
        const int n = static_cast<int>(h_exact(2, k)) + 1;
        for (long long i = 0; i < samples; ++i) {
            Graph g = random_low_degree_graph(n, 2, rng());
            FeasibilityResult res = brute_feasible(g, k);
            expect(rep, "above-h-k" + std::to_string(k) + "-" + std::to_string(i),
                   res.feasible,
                   "graph on " + std::to_string(n) + " vertices should be " +
                       std::to_string(k) + "-feasible");
        }
    }
    return rep;
}

SuiteReport run_sparse(std::uint64_t seed, long long samples) {
    if (samples < 0) samples = 1000;
    SuiteReport rep{"sparse", 0, {}};
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < samples; ++i) {
        int n = 5 + static_cast<int>(next_below(rng, 10));
        double p = std::min(1.0, next_unit(rng) * 3.0 / n);
        Graph g = random_graph(n, p, rng());
        double c = std::max(static_cast<double>(g.edge_count()) / n, 0.5);
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= 3; ++k) {
            int v = brute_fk(g, k).value;
            double cap = sparse_bound(n, c, 0.0, k);
            if (static_cast<double>(v) > cap) {
                ok = false;
                detail = "k = " + std::to_string(k) + ": f_k = " + std::to_string(v) +
                         " > " + std::to_string(cap);
            }
        }
        expect(rep, "rand-" + std::to_string(i), ok, detail);
    }
    return rep;
}

SuiteReport run_lemma_bound_sweep() {
    SuiteReport rep{"lemma", 0, {}};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
        Graph g = labeled_graph(6, mask);
        long long delta = g.max_degree();
        for (int k = 2; k <= 4; ++k) {
            int v = brute_fk(g, k).value;
            expect(rep, "n6-" + std::to_string(mask) + "-k" + std::to_string(k),
                   v <= lemma_bound(k, delta),
                   "f_k = " + std::to_string(v) + " > " +
                       std::to_string(lemma_bound(k, delta)));
        }
    }
    return rep;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, long long samples) {
    if (name == "oracle-equivalence") return run_oracle_equivalence(seed, samples);
    if (name == "sharpness-delta") return run_sharpness_delta();
    if (name == "sharpness-n") return run_sharpness_n();
    if (name == "trees") return run_trees();
    if (name == "forest-bound") return run_forest_bound(seed, samples);
    if (name == "prop32") return run_small_forest_prop(seed, samples);
    if (name == "lowdeg") return run_lowdeg(seed, samples);
    if (name == "feasibility") return run_feasibility(seed, samples);
    if (name == "sparse") return run_sparse(seed, samples);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> suite_names() {
    return {"oracle-equivalence", "sharpness-delta", "sharpness-n",
            "trees",              "forest-bound",    "prop32",
            "lowdeg",             "feasibility",     "sparse"};
}

} // namespace maxdeg
