#include <gtest/gtest.h>

#include "momwb/rational.hpp"
#include "momwb/scalarize.hpp"
#include "support.hpp"

using namespace momwb;
using momwb::testing::triangle_instance;

TEST(Rational, NormalizesAndCompares)
{
    Rational const half(2, 4);
    EXPECT_EQ(half, Rational(1, 2));
    EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
    EXPECT_LT(Rational(1, 3), half);
    EXPECT_EQ(half + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(half - Rational(1, 3), Rational(1, 6));
    EXPECT_EQ(half * Rational(2, 3), Rational(1, 3));
    EXPECT_EQ(half / Rational(1, 4), Rational(2));
    EXPECT_EQ(Rational(5, 10).to_string(), "1/2");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
    EXPECT_THROW((void)Rational(1, 0), std::domain_error);
    EXPECT_THROW((void)(half / Rational(0)), std::domain_error);
}

TEST(Rational, OverflowIsReported)
{
    Int128 const big = static_cast<Int128>(1) << 100;
    EXPECT_THROW((void)checked_mul(big, big), std::overflow_error);
    EXPECT_THROW((void)(Rational(big) * Rational(big)), std::overflow_error);
}

TEST(WeightedInstance, ValidatesWeights)
{
    auto const tri = momwb::testing::triangle_matroid();
    EXPECT_THROW((WeightedInstance{tri, {{1, 0, 2}}}), std::invalid_argument);
    EXPECT_THROW((WeightedInstance{tri, {{1, 2}}}), std::invalid_argument);
    EXPECT_THROW((WeightedInstance{tri, {}}), std::invalid_argument);
    EXPECT_EQ(triangle_instance().max_weight(), 3);
}

TEST(TradeOff, ReducesToLowestTerms)
{
    auto const t = TradeOff::from_weights({2, 4});
    EXPECT_EQ(t.denominator(), 3);
    EXPECT_EQ(t.to_string(), "1 2 / 3");
    EXPECT_EQ(TradeOff::from_scalar(Rational(1, 4)), TradeOff::from_weights({3, 1}));
    EXPECT_EQ(TradeOff::from_scalar(Rational(1, 4)).scalar(), Rational(1, 4));
    EXPECT_EQ(TradeOff::centroid(3).to_string(), "1 1 1 / 3");
    EXPECT_EQ(parse_tradeoff("1 2 / 3"), t);
    EXPECT_THROW((void)parse_tradeoff("2 4 / 6"), std::invalid_argument);
    EXPECT_THROW((void)TradeOff::from_weights({0, 0}), std::invalid_argument);
    EXPECT_THROW((void)TradeOff::from_weights({-1, 2}), std::invalid_argument);
}

TEST(ScalarizedWeight, SpecExamples)
{
    auto const inst = triangle_instance();
    auto const x = Solution::from_elements(3, {0, 2});
    EXPECT_EQ(scalarized_weight(inst, TradeOff::from_weights({1, 1}), x), Rational(4));
    EXPECT_EQ(scalarized_weight(inst, TradeOff::unit(2, 0), x), Rational(3));
    EXPECT_EQ(scalarized_weight(inst, TradeOff::unit(2, 1), x), Rational(5));
    EXPECT_EQ(scalarized_weight(inst, TradeOff::from_weights({1, 1}), Solution(3)), Rational(0));
    EXPECT_THROW((void)scalarized_weight(inst, TradeOff::centroid(3), x), std::invalid_argument);
}

TEST(FitnessScalar, SpecExamples)
{
    auto const inst = triangle_instance();
    EXPECT_EQ(fitness_scalar(inst, TradeOff::from_weights({1, 1}), Solution(3)), Rational(18));
    EXPECT_EQ(fitness_scalar(inst, TradeOff::unit(2, 0), Solution::from_elements(3, {0})), Rational(10));
    auto const base = Solution::from_elements(3, {1, 2});
    auto const lambda = TradeOff::from_weights({1, 3});
    EXPECT_EQ(fitness_scalar(inst, lambda, base), scalarized_weight(inst, lambda, base));
}

TEST(FitnessVector, SpecExamples)
{
    auto const inst = triangle_instance();
    EXPECT_EQ(fitness_vector(inst, Solution(3)), (ObjectivePoint{18, 18}));
    EXPECT_EQ(fitness_vector(inst, Solution::from_elements(3, {0, 2})), (ObjectivePoint{3, 5}));
}

TEST(Dominates, SpecExamples)
{
    EXPECT_TRUE(dominates(ObjectivePoint{1, 2}, ObjectivePoint{1, 3}));
    EXPECT_FALSE(dominates(ObjectivePoint{1, 3}, ObjectivePoint{2, 2}));
    EXPECT_TRUE(dominates(ObjectivePoint{4, 4}, ObjectivePoint{4, 4}));
    EXPECT_THROW((void)dominates(ObjectivePoint{1}, ObjectivePoint{1, 2}), std::invalid_argument);
}

TEST(ScalarizeProperties, PenaltyDominatesRank)
{
    Rng rng(21);
    for (int round = 0; round < 300; ++round) {
        auto const k = 2 + uniform_index(rng, 2);
        auto const inst = momwb::testing::random_small_instance(rng, k, 12, 100);
        std::vector<Int128> raw(k);
        for (auto& r : raw) {
            r = static_cast<Int128>(uniform_index(rng, 50));
        }
        raw[0] += 1;
        auto const lambda = TradeOff::from_weights(raw);
        auto const x = random_solution(inst.ground_size(), rng);
        auto const y = random_solution(inst.ground_size(), rng);
        auto const rx = inst.matroid().rank(x);
        auto const ry = inst.matroid().rank(y);
        auto const fx = fitness_scalar(inst, lambda, x);
        auto const fy = fitness_scalar(inst, lambda, y);
        if (rx > ry) {
            EXPECT_LT(fx, fy);
        } else if (ry > rx) {
            EXPECT_LT(fy, fx);
        }
        auto const sw = scalarized_weight(inst, lambda, x);
        EXPECT_EQ((sw * Rational(lambda.denominator())).denominator(), 1);
        if (inst.matroid().is_base(x)) {
            EXPECT_EQ(fitness_vector(inst, x), inst.image(x));
        }
    }
}

TEST(ScalarizeProperties, DominanceIsAPreorder)
{
    Rng rng(22);
    auto point = [&] {
        return ObjectivePoint{static_cast<std::int64_t>(uniform_index(rng, 4)),
                              static_cast<std::int64_t>(uniform_index(rng, 4))};
    };
    for (int round = 0; round < 2000; ++round) {
        auto const a = point();
        auto const b = point();
        auto const c = point();
        EXPECT_TRUE(dominates(a, a));
        if (dominates(a, b) && dominates(b, c)) {
            EXPECT_TRUE(dominates(a, c));
        }
    }
}
