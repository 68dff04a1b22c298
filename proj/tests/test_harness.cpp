#include "maxdeg/harness.hpp"

#include "gtest/gtest.h"

namespace maxdeg {
namespace {

TEST(LabeledGraphTest, EnumeratesAllBits) {
    EXPECT_EQ(labeled_graph(3, 0).edge_count(), 0);
    EXPECT_EQ(labeled_graph(3, 0b111).edge_count(), 3);
    // bit 0 is the pair (0,1), row-major
    Graph g = labeled_graph(4, 0b1);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_THROW(labeled_graph(9, 0), std::invalid_argument);
}

TEST(RandomLowDegreeTest, RespectsDegreeCapAndOrder) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g2 = random_low_degree_graph(12, 2, seed);
        EXPECT_EQ(g2.vertex_count(), 12);
        EXPECT_LE(g2.max_degree(), 2);
        Graph g1 = random_low_degree_graph(9, 1, seed);
        EXPECT_EQ(g1.vertex_count(), 9);
        EXPECT_LE(g1.max_degree(), 1);
    }
    EXPECT_EQ(random_low_degree_graph(10, 2, 3), random_low_degree_graph(10, 2, 3));
    EXPECT_THROW(random_low_degree_graph(5, 3, 0), std::invalid_argument);
}

TEST(SuiteTest, FixedSuitesPassWithExpectedCaseCounts) {
    SuiteReport delta = run_sharpness_delta();
    EXPECT_TRUE(delta.ok()) << delta.failures.front().detail;
    EXPECT_EQ(delta.cases, 44);

    SuiteReport order = run_sharpness_n();
    EXPECT_TRUE(order.ok());
    EXPECT_EQ(order.cases, 20);

    SuiteReport trees = run_trees();
    EXPECT_TRUE(trees.ok());
    EXPECT_EQ(trees.cases, 7);
}

TEST(SuiteTest, SeededSuitesPassOnSmallSamples) {
    SuiteReport forest = run_forest_bound(7, 5);
    EXPECT_TRUE(forest.ok());
    EXPECT_EQ(forest.cases, 10);

    SuiteReport prop = run_small_forest_prop(7, 50);
    EXPECT_TRUE(prop.ok());
    EXPECT_EQ(prop.cases, 52);

    SuiteReport lowdeg = run_lowdeg(7, 50);
    EXPECT_TRUE(lowdeg.ok());
    EXPECT_EQ(lowdeg.cases, 54);

    SuiteReport feas = run_feasibility(7, 5);
    EXPECT_TRUE(feas.ok());
    EXPECT_EQ(feas.cases, 10 + 4 * 5);

    SuiteReport sparse = run_sparse(7, 50);
    EXPECT_TRUE(sparse.ok());
    EXPECT_EQ(sparse.cases, 50);
}

TEST(SuiteTest, OracleEquivalenceSmokeRun) {
    SuiteReport rep = run_oracle_equivalence(7, 20);
    EXPECT_TRUE(rep.ok()) << rep.failures.front().detail;
    EXPECT_EQ(rep.cases, 32768 + 20);
}

TEST(SuiteTest, DispatchMatchesNames) {
    for (const std::string& name : suite_names()) {
        if (name == "oracle-equivalence" || name == "prop32") continue;   // covered above
        SuiteReport rep = run_suite(name, 3, 5);
        EXPECT_EQ(rep.suite, name);
        EXPECT_GT(rep.cases, 0);
    }
    EXPECT_THROW(run_suite("bogus"), std::invalid_argument);
    EXPECT_EQ(suite_names().size(), 9u);
}

TEST(SuiteTest, ReportsAreDeterministic) {
    SuiteReport a = run_lowdeg(11, 30);
    SuiteReport b = run_lowdeg(11, 30);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.failures.size(), b.failures.size());
}

} // namespace
} // namespace maxdeg
