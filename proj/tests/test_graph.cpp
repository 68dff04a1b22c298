#include "maxdeg/graph.hpp"

#include <algorithm>
#include <map>

#include "gtest/gtest.h"
#include "maxdeg/families.hpp"
#include "maxdeg/random.hpp"

namespace maxdeg {
namespace {

TEST(GraphTest, ConstructionRejectsBadEdges) {
    EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
    EXPECT_THROW(Graph(-1), std::invalid_argument);
}

TEST(GraphTest, BasicAccessors) {
    Graph g = star_graph(3);
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.degree(0), 3);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(1, 2));
    EXPECT_EQ(g.max_degree(), 3);
    EXPECT_EQ(g.min_degree(), 1);
}

TEST(DegreeViewTest, StarAndCycle) {
    DegreeView star = degree_view(star_graph(3));
    EXPECT_EQ(star.sorted, (std::vector<int>{3, 1, 1, 1}));
    EXPECT_EQ(star.diff, 2);

    DegreeView c5 = degree_view(cycle_graph(5));
    EXPECT_EQ(c5.sorted, std::vector<int>(5, 2));
    EXPECT_EQ(c5.diff, 0);
}

TEST(DegreeViewTest, CaterpillarT2) {
    Graph t2 = caterpillar_T(2).graph;
    DegreeView view = degree_view(t2);
    std::map<int, int> multiset;
    for (int d : view.degrees) ++multiset[d];
    EXPECT_EQ(multiset, (std::map<int, int>{{1, 9}, {2, 3}, {4, 1}, {7, 1}}));
    EXPECT_EQ(view.diff, 3);
}

TEST(DegreeViewTest, TinyGraphs) {
    DegreeView empty = degree_view(Graph(0));
    EXPECT_TRUE(empty.sorted.empty());
    EXPECT_EQ(empty.d1, -1);
    EXPECT_EQ(empty.d2, -1);

    DegreeView single = degree_view(Graph(1));
    EXPECT_EQ(single.d1, 0);
    EXPECT_EQ(single.d2, -1);
    EXPECT_EQ(single.diff, 0);
}

TEST(DeleteVerticesTest, PathInterior) {
    // P_4 minus one interior vertex = K_2 + K_1
    InducedSubgraph h = delete_vertices(path_graph(4), std::vector<int>{1});
    EXPECT_EQ(h.graph.vertex_count(), 3);
    EXPECT_EQ(h.graph.edge_count(), 1);
    EXPECT_EQ(h.original_ids, (std::vector<int>{0, 2, 3}));
    EXPECT_TRUE(h.graph.has_edge(1, 2));
}

TEST(DeleteVerticesTest, EmptySetIsIdentity) {
    Graph g = random_graph(9, 0.4, 7);
    InducedSubgraph h = delete_vertices(g, {});
    EXPECT_EQ(h.graph, g);
    for (int v = 0; v < g.vertex_count(); ++v)
        EXPECT_EQ(h.original_ids[static_cast<std::size_t>(v)], v);
}

TEST(DeleteVerticesTest, StarCenter) {
    InducedSubgraph h = delete_vertices(star_graph(13), std::vector<int>{0});
    EXPECT_EQ(h.graph.vertex_count(), 13);
    EXPECT_EQ(h.graph.edge_count(), 0);
}

TEST(DeleteVerticesTest, OutOfRangeThrows) {
    EXPECT_THROW(delete_vertices(Graph(3), std::vector<int>{3}), std::invalid_argument);
    EXPECT_THROW(delete_vertices(Graph(3), std::vector<int>{-1}), std::invalid_argument);
}

TEST(DeleteVerticesTest, KeepsExactlySurvivingEdges) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(10, 0.4, rng());
        std::vector<int> drop;
        for (int v = 0; v < 10; ++v)
            if (next_unit(rng) < 0.3) drop.push_back(v);
        InducedSubgraph h = delete_vertices(g, drop);
        EXPECT_EQ(h.graph.vertex_count(), 10 - static_cast<int>(drop.size()));
        long long expected_edges = 0;
        for (auto [u, v] : g.edges()) {
            bool u_gone = std::find(drop.begin(), drop.end(), u) != drop.end();
            bool v_gone = std::find(drop.begin(), drop.end(), v) != drop.end();
            if (!u_gone && !v_gone) ++expected_edges;
        }
        EXPECT_EQ(h.graph.edge_count(), expected_edges);
        for (int a = 0; a < h.graph.vertex_count(); ++a)
            for (int b = a + 1; b < h.graph.vertex_count(); ++b)
                EXPECT_EQ(h.graph.has_edge(a, b),
                          g.has_edge(h.original_ids[static_cast<std::size_t>(a)],
                                     h.original_ids[static_cast<std::size_t>(b)]));
    }
}

TEST(ComponentsTest, Examples) {
    Graph two_k2(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(components(two_k2),
              (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
    EXPECT_EQ(components(cycle_graph(5)).size(), 1u);
    Graph cherries = g2_extremal(4).graph;   // 3 disjoint K_{1,2}
    auto comps = components(cherries);
    ASSERT_EQ(comps.size(), 3u);
    for (const auto& comp : comps) EXPECT_EQ(comp.size(), 3u);
}

TEST(IsForestTest, Examples) {
    EXPECT_TRUE(is_forest(path_graph(7)));
    EXPECT_FALSE(is_forest(cycle_graph(3)));
    EXPECT_TRUE(is_forest(caterpillar_T(2).graph));
    EXPECT_TRUE(is_forest(Graph(0)));
}

TEST(RandomGraphTest, ExtremesAndDeterminism) {
    EXPECT_EQ(random_graph(5, 0.0, 3).edge_count(), 0);
    EXPECT_EQ(random_graph(5, 1.0, 3), complete_graph(5));
    EXPECT_EQ(random_graph(12, 0.37, 99), random_graph(12, 0.37, 99));
    EXPECT_NE(random_graph(12, 0.5, 1), random_graph(12, 0.5, 2));
    EXPECT_THROW(random_graph(3, 1.5, 0), std::invalid_argument);
}

TEST(RandomForestTest, AcyclicAndDeterministic) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph f = random_forest(100, seed);
        EXPECT_TRUE(is_forest(f));
        EXPECT_LE(f.edge_count(), 99);
        EXPECT_TRUE(check_graph(f));
    }
    EXPECT_EQ(random_forest(64, 5), random_forest(64, 5));
}

TEST(InvariantTest, GeneratedGraphsAreWellFormed) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(15, next_unit(rng), rng());
        std::string why;
        EXPECT_TRUE(check_graph(g, &why)) << why;
        long long degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
    }
}

TEST(BuildersTest, Shapes) {
    EXPECT_EQ(path_graph(1).edge_count(), 0);
    EXPECT_EQ(path_graph(0).vertex_count(), 0);
    EXPECT_EQ(cycle_graph(3).edge_count(), 3);
    EXPECT_THROW(cycle_graph(2), std::invalid_argument);
    EXPECT_EQ(complete_graph(4).edge_count(), 6);
    Graph u = disjoint_union({path_graph(2), cycle_graph(3)});
    EXPECT_EQ(u.vertex_count(), 5);
    EXPECT_EQ(u.edge_count(), 4);
    EXPECT_TRUE(u.has_edge(0, 1));
    EXPECT_TRUE(u.has_edge(2, 3));
}

} // namespace
} // namespace maxdeg
