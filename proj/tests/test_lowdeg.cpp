#include "maxdeg/lowdeg.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "gtest/gtest.h"
#include "maxdeg/families.hpp"
#include "maxdeg/harness.hpp"
#include "maxdeg/io.hpp"
#include "maxdeg/oracle.hpp"
#include "maxdeg/random.hpp"

namespace maxdeg {
namespace {

bool dominates(const Graph& g, const std::vector<int>& dom) {
    std::set<int> in(dom.begin(), dom.end());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in.count(v)) continue;
        bool covered = false;
        for (int w : g.neighbors(v)) covered |= in.count(w) > 0;
        if (!covered) return false;
    }
    return true;
}

// exhaustive check that no dominating set smaller than `size` exists
bool is_minimum(const Graph& g, std::size_t size) {
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) >= size) continue;
        std::vector<int> dom;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) dom.push_back(v);
        if (dominates(g, dom)) return false;
    }
    return true;
}

TEST(DecomposeTest, Examples) {
    Graph g = disjoint_union({star_graph(2), star_graph(2), path_graph(2)});
    LowDegDecomposition d = decompose_deg2(g);
    EXPECT_EQ(d.t, 2);
    EXPECT_EQ(d.trivial.size(), 1u);
    EXPECT_TRUE(d.larger.empty());
    EXPECT_EQ(d.n2, 2);
    EXPECT_TRUE(d.f_vertices.empty());

    LowDegDecomposition p5 = decompose_deg2(path_graph(5));
    EXPECT_EQ(p5.larger.size(), 1u);
    EXPECT_EQ(p5.f_vertices, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(p5.t, 0);

    LowDegDecomposition c6 = decompose_deg2(cycle_graph(6));
    EXPECT_EQ(c6.f_vertices.size(), 6u);
    EXPECT_EQ(c6.larger.size(), 1u);

    // C_3 is not a cherry even though it has 3 vertices
    LowDegDecomposition c3 = decompose_deg2(cycle_graph(3));
    EXPECT_EQ(c3.t, 0);
    EXPECT_EQ(c3.larger.size(), 1u);

    EXPECT_THROW(decompose_deg2(star_graph(3)), std::invalid_argument);
}

TEST(MinDominatingTest, Examples) {
    EXPECT_EQ(min_dominating_paths_cycles(path_graph(3)), std::vector<int>{1});
    EXPECT_EQ(min_dominating_paths_cycles(path_graph(4)).size(), 2u);
    EXPECT_EQ(min_dominating_paths_cycles(cycle_graph(6)).size(), 2u);
    EXPECT_THROW(min_dominating_paths_cycles(star_graph(3)), std::invalid_argument);
}

TEST(MinDominatingTest, ExactOnAllSmallPathsAndCycles) {
    for (int len = 1; len <= 12; ++len) {
        Graph p = path_graph(len);
        auto dom = min_dominating_paths_cycles(p);
        EXPECT_EQ(dom.size(), static_cast<std::size_t>((len + 2) / 3)) << "P_" << len;
        EXPECT_TRUE(dominates(p, dom)) << "P_" << len;
        EXPECT_TRUE(is_minimum(p, dom.size())) << "P_" << len;
    }
    for (int len = 3; len <= 12; ++len) {
        Graph c = cycle_graph(len);
        auto dom = min_dominating_paths_cycles(c);
        EXPECT_EQ(dom.size(), static_cast<std::size_t>((len + 2) / 3)) << "C_" << len;
        EXPECT_TRUE(dominates(c, dom)) << "C_" << len;
        EXPECT_TRUE(is_minimum(c, dom.size())) << "C_" << len;
    }
}

TEST(MinDominatingTest, MixedUnion) {
    Graph g = disjoint_union({path_graph(4), cycle_graph(5), Graph(1)});
    auto dom = min_dominating_paths_cycles(g);
    EXPECT_TRUE(dominates(g, dom));
    EXPECT_EQ(dom.size(), 2u + 2u + 1u);
}

TEST(EquateDeg2Test, Examples) {
    Graph cherries = g2_extremal(4).graph;   // 3 K_{1,2}
    Certificate cert = equate_deg2(cherries, 4);
    EXPECT_TRUE(verify_certificate(cherries, cert));
    EXPECT_EQ(cert.deleted.size(), 3u);

    Certificate c5 = equate_deg2(cycle_graph(5), 3);
    EXPECT_TRUE(c5.deleted.empty());
    EXPECT_TRUE(verify_certificate(cycle_graph(5), c5));

    Certificate p4 = equate_deg2(path_graph(4), 3);
    EXPECT_TRUE(verify_certificate(path_graph(4), p4));
    EXPECT_EQ(static_cast<int>(p4.deleted.size()), brute_fk(path_graph(4), 3).value);
}

TEST(EquateDeg2Test, DominatingSetThenCherryLeafBranch) {
    // P_5 + cherry, k = 6: dominate the path interior, then one cherry
    // leaf turns the cherry into an isolated edge
    Graph g = disjoint_union({path_graph(5), star_graph(2)});
    Certificate cert = equate_deg2(g, 6);
    EXPECT_TRUE(verify_certificate(g, cert));
    EXPECT_EQ(cert.deleted.size(), 2u);
    EXPECT_EQ(cert.result_max_degree, 1);
    EXPECT_EQ(cert.realizing.size(), 6u);
}

TEST(EquateDeg2Test, DominatingSetThenEndpointAndCenterBranch) {
    // P_4 + cherry, k = 5: too few degree-1 vertices remain, so one
    // endpoint per residual edge and the cherry center go as well
    Graph g = disjoint_union({path_graph(4), star_graph(2)});
    Certificate cert = equate_deg2(g, 5);
    EXPECT_TRUE(verify_certificate(g, cert));
    EXPECT_EQ(cert.deleted.size(), 3u);
    EXPECT_LE(cert.deleted.size(), 4u);   // k - 1
    EXPECT_TRUE(cert.small_h);            // 4 vertices remain, below k
    EXPECT_EQ(static_cast<int>(cert.deleted.size()), brute_fk(g, 5).value);
}

TEST(EquateDeg2Test, ManyCherriesBranch) {
    // t exceeds floor((k-1)/2): every degree-2 vertex of the larger
    // components goes, plus one leaf per cherry
    Graph g = disjoint_union({star_graph(2), star_graph(2), star_graph(2), path_graph(4)});
    Certificate cert = equate_deg2(g, 6);
    EXPECT_TRUE(verify_certificate(g, cert));
    EXPECT_EQ(cert.deleted.size(), 5u);   // = n2 <= k-1
    EXPECT_EQ(cert.result_max_degree, 1);
}

TEST(EquateDeg2Test, Preconditions) {
    EXPECT_THROW(equate_deg2(star_graph(3), 2), std::invalid_argument);
    EXPECT_THROW(equate_deg2(path_graph(3), 1), std::invalid_argument);
}

TEST(EquateDeg2Test, DegreeOneInputsUseHalfBudget) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(next_below(rng, 14));
        int k = 2 + static_cast<int>(next_below(rng, 5));
        Graph g = random_low_degree_graph(n, 1, rng());
        Certificate cert = equate_deg2(g, k);
        EXPECT_TRUE(verify_certificate(g, cert));
        EXPECT_LE(static_cast<int>(cert.deleted.size()), (k - 1) / 2);
    }
}

TEST(EquateDeg2Test, RandomLowDegreeGraphsStayWithinBudget) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 1500; ++trial) {
        int n = 4 + static_cast<int>(next_below(rng, 13));
        int k = 2 + static_cast<int>(next_below(rng, 5));
        Graph g = random_low_degree_graph(n, 2, rng());
        Certificate cert = equate_deg2(g, k);
        EXPECT_TRUE(verify_certificate(g, cert)) << "k = " << k << "\n" << emit_edge_list(g);
        EXPECT_LE(static_cast<int>(cert.deleted.size()), k - 1);
        EXPECT_GE(static_cast<int>(cert.deleted.size()), brute_fk(g, k).value);
    }
}

} // namespace
} // namespace maxdeg
