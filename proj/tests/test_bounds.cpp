#include "maxdeg/bounds.hpp"

#include <cmath>
#include <cstdint>

#include "gtest/gtest.h"
#include "maxdeg/errors.hpp"
#include "maxdeg/graph.hpp"
#include "maxdeg/exactf.hpp"
#include "maxdeg/harness.hpp"

namespace maxdeg {
namespace {

TEST(BoundFDeltaTest, Values) {
    EXPECT_EQ(bound_f_delta(0), 0);
    EXPECT_EQ(bound_f_delta(1), 0);
    EXPECT_EQ(bound_f_delta(2), 1);
    EXPECT_EQ(bound_f_delta(3), 1);
    EXPECT_EQ(bound_f_delta(4), 2);
    EXPECT_EQ(bound_f_delta(13), 4);
    EXPECT_EQ(bound_f_delta(45), 8);
    EXPECT_THROW(bound_f_delta(-1), std::invalid_argument);
}

TEST(BoundFNTest, Values) {
    EXPECT_EQ(bound_f_n(4), 1);
    EXPECT_EQ(bound_f_n(5), 1);
    EXPECT_EQ(bound_f_n(6), 2);
    EXPECT_EQ(bound_f_n(9), 3);
    EXPECT_EQ(bound_f_n(14), 4);
    EXPECT_THROW(bound_f_n(3), std::invalid_argument);
}

TEST(BoundsTest, IntegerSearchAgreesWithCeilingFormula) {
    for (long long delta = 1; delta <= 1'000'000; ++delta) {
        auto expected = static_cast<long long>(
            std::ceil((-3.0 + std::sqrt(8.0 * static_cast<double>(delta) + 1.0)) / 2.0));
        if (delta == 1) expected = 0;
        ASSERT_EQ(bound_f_delta(delta), expected) << "delta = " << delta;
    }
    for (long long n = 4; n <= 1'000'000; ++n) {
        auto expected = static_cast<long long>(
            std::ceil((-3.0 + std::sqrt(8.0 * static_cast<double>(n) - 15.0)) / 2.0));
        ASSERT_EQ(bound_f_n(n), expected) << "n = " << n;
    }
}

TEST(GExactTest, Values) {
    EXPECT_EQ(g_exact(2, 5), 4);
    EXPECT_EQ(g_exact(1, 5), 2);
    EXPECT_EQ(g_exact(0, 9), 0);
    EXPECT_EQ(g_exact(13, 2), 4);
    EXPECT_EQ(g_exact(2, 2), 1);
    EXPECT_THROW(g_exact(3, 3), unknown_value_error);
    EXPECT_THROW(g_exact(2, 1), std::invalid_argument);
}

TEST(HExactTest, Values) {
    EXPECT_EQ(h_exact(2, 5), 8);
    EXPECT_EQ(h_exact(2, 4), 5);
    EXPECT_EQ(h_exact(2, 2), 1);
    EXPECT_EQ(h_exact(1, 3), 3);
    EXPECT_EQ(h_exact(0, 7), 6);
    EXPECT_THROW(h_exact(3, 2), unknown_value_error);
}

TEST(LemmaBoundTest, Values) {
    EXPECT_EQ(lemma_bound(4, 5), 15);
    EXPECT_EQ(lemma_bound(2, 0), 0);
    EXPECT_EQ(lemma_bound(3, 2), 4);
}

TEST(SparseBoundTest, Values) {
    EXPECT_DOUBLE_EQ(sparse_bound(100, 1.0, 0.0, 3), 40.0);
    EXPECT_DOUBLE_EQ(sparse_bound(4, 0.5, 0.0, 2), 4.0);
    EXPECT_DOUBLE_EQ(sparse_bound(1, 0.75, 0.3, 5), 5.5);
    EXPECT_THROW(sparse_bound(10, 0.0, 0.0, 2), std::invalid_argument);
    EXPECT_THROW(sparse_bound(10, 1.0, 1.0, 2), std::invalid_argument);
}

TEST(GLowerEvenTest, Values) {
    EXPECT_EQ(g_lower_even(7, 4), 7);
    EXPECT_EQ(g_lower_even(2, 2), 1);
    EXPECT_EQ(g_lower_even(13, 2), 4);
    EXPECT_THROW(g_lower_even(5, 3), std::invalid_argument);
}

TEST(RamseyCapTest, Values) {
    EXPECT_EQ(h_ramsey_cap(2), 1);
    EXPECT_EQ(h_ramsey_cap(3), 5);
    EXPECT_EQ(h_ramsey_cap(4), 17);
    EXPECT_THROW(h_ramsey_cap(5), unknown_value_error);
    EXPECT_THROW(h_ramsey_cap(1), std::invalid_argument);
}

TEST(BoundsTest, DominateExactValuesOnSmallCorpus) {
    // exhaustive n = 4..6 sweeps of both closed-form bounds
    for (int n = 4; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            Graph g = labeled_graph(n, mask);
            int value = exact_f(g).value;
            ASSERT_LE(value, bound_f_delta(g.max_degree())) << n << " " << mask;
            ASSERT_LE(value, bound_f_n(n)) << n << " " << mask;
        }
    }
}

TEST(RamseyCapTest, DiagonalValueSixIsExhaustivelyCorrect) {
    // every graph on 6 vertices has a triangle or an independent 3-set
    auto has_mono_triple = [](const Graph& g, int n) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    int edges = (g.has_edge(a, b) ? 1 : 0) + (g.has_edge(a, c) ? 1 : 0) +
                                (g.has_edge(b, c) ? 1 : 0);
                    if (edges == 0 || edges == 3) return true;
                }
        return false;
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask)
        ASSERT_TRUE(has_mono_triple(labeled_graph(6, mask), 6)) << mask;
    // ... and C_5 on 5 vertices has neither
    EXPECT_FALSE(has_mono_triple(cycle_graph(5), 5));
}

} // namespace
} // namespace maxdeg
