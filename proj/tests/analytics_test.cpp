#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "keyfactor/analytics.hpp"

using namespace keyfactor;

namespace {

SumsTable table_of(std::vector<std::pair<Count, Count>> sums) {
    SumsTable t;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        t.push_back({make_factor(FactorCategory::Component, "f" + std::to_string(i + 1), i + 1), sums[i].first,
                     sums[i].second});
    }
    return t;
}

std::vector<std::size_t> ranks(std::vector<Count> v) { return competition_rank(v); }

}  // namespace

TEST(NormalizeSums, DividesByAxisMaximum) {
    const auto n = normalize_sums(table_of({{22, 8}, {23, 24}, {0, 0}}));
    EXPECT_DOUBLE_EQ(n.active[1], 100.0);
    EXPECT_DOUBLE_EQ(n.passive[1], 100.0);
    EXPECT_DOUBLE_EQ(round_display(n.active[0], 1), 95.7);
    EXPECT_DOUBLE_EQ(round_display(n.passive[0], 1), 33.3);
    EXPECT_DOUBLE_EQ(n.active[2], 0.0);
}

TEST(NormalizeSums, ZeroAxis) {
    const auto n = normalize_sums(table_of({{0, 3}, {0, 0}}));
    EXPECT_EQ(n.active, (std::vector<double>{0.0, 0.0}));
    EXPECT_EQ(n.passive, (std::vector<double>{100.0, 0.0}));
}

TEST(RoundDisplay, HalfAwayFromZero) {
    EXPECT_DOUBLE_EQ(round_display(12.5, 0), 13.0);
    EXPECT_DOUBLE_EQ(round_display(0.25, 1), 0.3);
    EXPECT_DOUBLE_EQ(round_display(95.652173, 1), 95.7);
    EXPECT_DOUBLE_EQ(round_display(4.1666, 1), 4.2);
}

TEST(CompetitionRank, TiesShareSmallestRank) {
    EXPECT_EQ(ranks({12, 11, 12, 23}), (std::vector<std::size_t>{2, 4, 2, 1}));
    EXPECT_EQ(ranks({5, 5, 5}), (std::vector<std::size_t>{1, 1, 1}));
    EXPECT_TRUE(ranks({}).empty());
}

TEST(CompetitionRank, MatchesDefinitionAndScaleInvariant) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        std::vector<Count> v(rng() % 40);
        for (auto &x : v) x = rng() % 12;
        const auto r = competition_rank(v);
        for (std::size_t a = 0; a < v.size(); ++a) {
            std::size_t greater = 0;
            for (const Count y : v) greater += y > v[a] ? 1 : 0;
            EXPECT_EQ(r[a], greater + 1);
            EXPECT_GE(r[a], 1u);
            EXPECT_LE(r[a], v.size());
        }
        const Count k = 1 + rng() % 9;
        auto scaled = v;
        for (auto &x : scaled) x *= k;
        EXPECT_EQ(competition_rank(scaled), r);
    }
}

TEST(Classify, RegionsByRatio) {
    const AnalysisConfig cfg;
    EXPECT_EQ(classify(34.8, 12.5, cfg), Region::Dominant);
    EXPECT_EQ(classify(95.7, 83.3, cfg), Region::Dynamic);
    EXPECT_EQ(classify(13.0, 45.8, cfg), Region::Reactive);
    EXPECT_EQ(classify(0, 0, cfg), Region::Isolated);
    EXPECT_EQ(classify(4.3, 0, cfg), Region::Dominant);
    EXPECT_EQ(classify(0, 100, cfg), Region::Reactive);
    // Boundaries are inclusive.
    EXPECT_EQ(classify(50, 25, cfg), Region::Dominant);
    EXPECT_EQ(classify(25, 50, cfg), Region::Reactive);
}

TEST(Classify, OutOfRangeIsContractViolation) {
    const AnalysisConfig cfg;
    EXPECT_THROW(classify(-0.1, 5, cfg), std::domain_error);
    EXPECT_THROW(classify(5, 100.5, cfg), std::domain_error);
    EXPECT_THROW(classify(std::numeric_limits<double>::quiet_NaN(), 5, cfg), std::domain_error);
}

TEST(Classify, DependsOnlyOnRatio) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.5, 50.0);
    std::uniform_real_distribution<double> s(0.1, 2.0);
    const AnalysisConfig cfg;
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng);
        const double p = u(rng);
        const double k = s(rng);
        const double ratio = a / p;
        // Skip the measure-zero boundary where scaling may flip a rounding bit.
        if (std::abs(ratio - cfg.dominant_ratio) < 1e-9 || std::abs(ratio - cfg.reactive_ratio) < 1e-9) continue;
        EXPECT_EQ(classify(a, p, cfg), classify(k * a, k * p, cfg));
    }
}

TEST(SelectKeyFactors, CombinedThreshold) {
    FactorScores scores(3);
    scores[0].active_norm = 0;
    scores[0].passive_norm = 100;
    scores[1].active_norm = 100.0 / 23;
    scores[1].passive_norm = 100.0 / 24;
    scores[2].active_norm = 0;
    scores[2].passive_norm = 0;
    AnalysisConfig cfg;
    EXPECT_EQ(select_key_factors(scores, cfg), (std::vector<bool>{true, false, false}));
    cfg.key_threshold = 0;
    EXPECT_EQ(select_key_factors(scores, cfg), (std::vector<bool>{true, true, true}));
    cfg.key_threshold = 200;
    EXPECT_EQ(select_key_factors(scores, cfg), (std::vector<bool>{false, false, false}));
}

TEST(AnalysisConfig, Validation) {
    AnalysisConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.reactive_ratio = 2.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.key_threshold = 201;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.dominant_ratio = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Analyze, SingleChainRegions) {
    const ChainSet cs = {{"A", "c",
                          {{FactorCategory::Component, "A"}, {FactorCategory::Action, "B"}, {FactorCategory::Harm, "H"}}}};
    const auto s = analyze(cs);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].region, Region::Dominant);
    EXPECT_EQ(s[1].region, Region::Dynamic);
    EXPECT_EQ(s[2].region, Region::Reactive);
    EXPECT_DOUBLE_EQ(s[1].active_norm, 100.0);
    EXPECT_DOUBLE_EQ(s[1].passive_norm, 100.0);
    EXPECT_EQ(s[0].active_rank, 1u);
    EXPECT_EQ(s[2].active_rank, 3u);
}

TEST(Analyze, EmptyInputs) {
    EXPECT_TRUE(analyze(ChainSet{}).empty());
    EXPECT_TRUE(analyze(SumsTable{}).empty());
}

TEST(Analyze, EveryFactorGetsOneRegionAndMaximaAreHundred) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::pair<Count, Count>> v(1 + rng() % 30);
        for (auto &[a, p] : v) {
            a = rng() % 15;
            p = rng() % 15;
        }
        const auto scores = analyze(table_of(v));
        Count max_a = 0;
        for (const auto &[a, p] : v) max_a = std::max(max_a, a);
        for (std::size_t k = 0; k < v.size(); ++k) {
            EXPECT_EQ(scores[k].active_norm == 100.0, max_a > 0 && v[k].first == max_a);
            EXPECT_GE(scores[k].active_norm, 0.0);
            EXPECT_LE(scores[k].passive_norm, 100.0);
        }
    }
}
