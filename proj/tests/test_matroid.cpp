#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "momwb/matroid.hpp"
#include "momwb/oracle.hpp"
#include "momwb/solution.hpp"
#include "support.hpp"

using namespace momwb;
using momwb::testing::triangle_matroid;

TEST(Solution, RoundTripsThroughString)
{
    auto const x = Solution::from_string("1011001");
    EXPECT_EQ(x.size(), 7U);
    EXPECT_EQ(x.count(), 4U);
    EXPECT_EQ(x.to_string(), "1011001");
    EXPECT_EQ(x.elements(), (std::vector<std::size_t>{0, 2, 3, 6}));
    EXPECT_THROW((void)Solution::from_string("10x"), std::invalid_argument);
}

TEST(Solution, HammingDistanceAcrossWordBoundary)
{
    auto a = Solution(130);
    auto b = Solution(130);
    a.set(3);
    a.set(64);
    b.set(129);
    EXPECT_EQ(a.hamming_distance(b), 3U);
    EXPECT_EQ(a.hamming_distance(a), 0U);
    EXPECT_THROW((void)a.hamming_distance(Solution(5)), std::invalid_argument);
}

TEST(Rank, TriangleExamples)
{
    auto const tri = triangle_matroid();
    EXPECT_EQ(tri.full_rank(), 2U);
    EXPECT_EQ(tri.rank(Solution(3)), 0U);
    EXPECT_EQ(tri.rank(Solution::from_elements(3, {0, 1})), 2U);
    EXPECT_EQ(tri.rank(Solution::from_string("111")), 2U);
}

TEST(Rank, UniformIsCappedCardinality)
{
    auto const u = Matroid::uniform(5, 2);
    EXPECT_EQ(u.rank(Solution::from_string("11110")), 2U);
    EXPECT_EQ(u.rank(Solution::from_string("10000")), 1U);
}

TEST(Rank, IsolatedVerticesCountAsComponents)
{
    auto const g = Matroid::graphic(5, {{0, 1}, {2, 3}});
    EXPECT_EQ(g.full_rank(), 2U);
}

TEST(Rank, LengthMismatchIsRejected)
{
    EXPECT_THROW((void)triangle_matroid().rank(Solution(4)), std::invalid_argument);
}

TEST(Matroid, RejectsBadConstruction)
{
    EXPECT_THROW((void)Matroid::graphic(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW((void)Matroid::graphic(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW((void)Matroid::uniform(3, 4), std::invalid_argument);
}

TEST(IsBase, TriangleExamples)
{
    auto const tri = triangle_matroid();
    EXPECT_TRUE(tri.is_base(Solution::from_elements(3, {0, 1})));
    EXPECT_FALSE(tri.is_base(Solution::from_string("111")));
    EXPECT_FALSE(tri.is_base(Solution(3)));
}

TEST(Greedy, SpecExamples)
{
    auto const tri = triangle_matroid();
    EXPECT_EQ(greedy_min_base(tri, std::vector<int>{1, 3, 2}), Solution::from_elements(3, {0, 2}));
    EXPECT_EQ(greedy_min_base(Matroid::uniform(3, 2), std::vector<int>{3, 1, 2}), Solution::from_elements(3, {1, 2}));
    EXPECT_EQ(greedy_min_base(tri, std::vector<int>{7, 7, 7}), Solution::from_elements(3, {0, 1}));
}

TEST(Greedy, RankZeroMatroidGivesEmptySolution)
{
    auto const u = Matroid::uniform(3, 0);
    EXPECT_EQ(greedy_min_base(u, std::vector<int>{1, 2, 3}), Solution(3));
}

TEST(RankProperties, MonotoneSubcardinalSubmodular)
{
    Rng rng(11);
    for (int round = 0; round < 200; ++round) {
        auto const inst = momwb::testing::random_small_instance(rng, 2, 12, 10);
        auto const& mat = inst.matroid();
        auto const m = mat.ground_size();
        auto const x = random_solution(m, rng);
        auto const y = random_solution(m, rng);
        auto const rx = mat.rank(x);
        EXPECT_LE(rx, x.count());
        EXPECT_LE(rx, mat.full_rank());
        for (std::size_t e = 0; e < m; ++e) {
            auto bigger = x;
            bigger.set(e);
            auto const rb = mat.rank(bigger);
            EXPECT_GE(rb, rx);
            EXPECT_LE(rb, rx + 1);
        }
        Solution both(m);
        Solution either(m);
        for (std::size_t e = 0; e < m; ++e) {
            both.set(e, x.test(e) && y.test(e));
            either.set(e, x.test(e) || y.test(e));
        }
        EXPECT_LE(mat.rank(both) + mat.rank(either), rx + mat.rank(y));
    }
}

TEST(GreedyProperties, OptimalAndDeterministic)
{
    Rng rng(12);
    for (int round = 0; round < 200; ++round) {
        auto const inst = momwb::testing::random_small_instance(rng, 1, 12, 20);
        auto const& mat = inst.matroid();
        std::vector<std::int64_t> keys(inst.row(0).begin(), inst.row(0).end());
        auto const base = greedy_min_base(mat, keys);
        EXPECT_TRUE(mat.is_base(base));
        EXPECT_EQ(base, greedy_min_base(mat, keys));
        auto weight = [&](const Solution& s) {
            std::int64_t total = 0;
            for (auto e : s.elements()) {
                total += keys[e];
            }
            return total;
        };
        std::int64_t best = weight(base);
        for (auto const& b : enumerate_bases(mat)) {
            best = std::min(best, weight(b));
        }
        EXPECT_EQ(weight(base), best);
    }
}
