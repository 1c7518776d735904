#include <gtest/gtest.h>

#include <cmath>

#include "asr/a_hat.hpp"
#include "asr/harness.hpp"

using namespace asr;

namespace {

PairSpec k4c4() { return build_pair_spec(complete_graph(4), cycle_graph(4)); }
PairSpec k3k3() { return build_pair_spec(complete_graph(3), complete_graph(3)); }

}  // namespace

TEST(SampleGnp, Extremes) {
    EXPECT_EQ(sample_gnp(10, 0.0, 1).edge_count(), 0);
    EXPECT_EQ(sample_gnp(10, 1.0, 1), complete_graph(10));
    EXPECT_EQ(sample_gnp(10, 2.0, 1), complete_graph(10));
    EXPECT_EQ(sample_gnp(0, 0.5, 1).vertex_count(), 0);
}

TEST(SampleGnp, HalfDensityAndDeterminism) {
    Graph a = sample_gnp(30, 0.5, 12345);
    EXPECT_EQ(a, sample_gnp(30, 0.5, 12345));
    double sigma = std::sqrt(435 * 0.25);
    EXPECT_LT(std::abs(a.edge_count() - 217.5), 5 * sigma);
    EXPECT_NE(a, sample_gnp(30, 0.5, 12346));
    // edge k depends on (seed, k) only, so growing p only adds edges
    Graph lo = sample_gnp(30, 0.3, 7), hi = sample_gnp(30, 0.6, 7);
    for (const Edge& e : lo.edges()) EXPECT_TRUE(hi.has_edge(e.u, e.v));
}

TEST(SampleGnp, MeanOverSeeds) {
    long total = 0;
    const int runs = 400;
    for (int s = 0; s < runs; ++s) total += sample_gnp(20, 0.1, derive_seed(3, s)).edge_count();
    double mean = static_cast<double>(total) / runs;  // expect 19, sd of the mean ~0.2
    EXPECT_NEAR(mean, 19.0, 1.2);
}

TEST(EdgeProbability, ClampsAndScales) {
    EXPECT_EQ(edge_probability(20, 0, Rational(9, 4)), 0.0);
    EXPECT_EQ(edge_probability(20, 1000, Rational(9, 4)), 1.0);
    EXPECT_NEAR(edge_probability(16, 1, Rational(2)), 0.25, 1e-12);
}

TEST(RunTrial, EmptyGraphColored) {
    TrialConfig c{k4c4(), {}, 20, Rational(0), 5, kDefaultBudget, TrialMode::ColorPlusOracle};
    auto r = run_trial(c);
    EXPECT_EQ(r.edges, 0);
    EXPECT_EQ(r.colorer, ColorerStatus::Colored);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.oracle, Verdict::Valid);
}

TEST(RunTrial, K6ForTrianglesIsStuckAndInvalid) {
    PairSpec pair = k3k3();
    auto fam = enumerate_a_hat(pair, 7).graphs();
    TrialConfig c{pair, fam, 6, Rational(100), 1, kDefaultBudget, TrialMode::ColorPlusOracle};
    auto r = run_trial(c);
    EXPECT_EQ(r.edges, 15);
    EXPECT_EQ(r.colorer, ColorerStatus::Stuck);
    EXPECT_EQ(r.oracle, Verdict::Invalid);
    EXPECT_FALSE(r.soundness_failure());

    c.mode = TrialMode::FullPipeline;
    r = run_trial(c, true);
    ASSERT_TRUE(r.stuck);
    EXPECT_TRUE(r.stuck->in_Cstar);
    ASSERT_TRUE(r.grow) << r.grow_error;
    EXPECT_TRUE(r.grow->audit.ok);
    EXPECT_EQ(r.grow->variant, GrowVariant::GrowAlt);
    ASSERT_TRUE(r.trace);
}

TEST(RunTrial, SmallBMostlyColored) {
    int colored = 0;
    for (int s = 0; s < 100; ++s) {
        TrialConfig c{k4c4(), {}, 20, Rational(1, 4), derive_seed(11, s), kDefaultBudget, TrialMode::ColorOnly};
        auto r = run_trial(c);
        colored += r.colorer == ColorerStatus::Colored;
        EXPECT_FALSE(r.soundness_failure());
    }
    EXPECT_GE(colored, 95);
}

TEST(Sweep, EmptyBList) {
    SweepConfig c{k4c4(), {}, {20, 30}, {}, 5, 1, kDefaultBudget, TrialMode::ColorOnly};
    auto r = sweep(c);
    EXPECT_TRUE(r.cells.empty());
    EXPECT_EQ(sweep_csv(r, false), sweep_csv_header());
}

TEST(Sweep, SingleTrialMatchesRunTrial) {
    SweepConfig c{k4c4(), {}, {25}, {Rational(1, 2)}, 1, 99, kDefaultBudget, TrialMode::ColorPlusOracle};
    std::vector<TrialResult> seen;
    auto rep = sweep(c, {}, [&](const TrialResult& r) { seen.push_back(r); });
    ASSERT_EQ(seen.size(), 1u);
    TrialConfig tc{c.pair, {}, 25, Rational(1, 2), derive_seed(99, 25, 1, 2, 0), kDefaultBudget,
                   TrialMode::ColorPlusOracle};
    auto direct = run_trial(tc);
    EXPECT_EQ(direct.seed, seen[0].seed);
    EXPECT_EQ(direct.edges, seen[0].edges);
    EXPECT_EQ(direct.colorer, seen[0].colorer);
    EXPECT_EQ(direct.oracle, seen[0].oracle);
    ASSERT_EQ(rep.cells.size(), 1u);
    EXPECT_EQ(rep.cells[0].trials, 1);
}

TEST(Sweep, CsvIsDeterministic) {
    SweepConfig c{k4c4(), {}, {12, 16}, {Rational(1, 2), 1, 2}, 6, 2024, kDefaultBudget, TrialMode::ColorOnly};
    std::string a = sweep_csv(sweep(c), false);
    std::string b = sweep_csv(sweep(c), false);
    EXPECT_EQ(a, b);
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 7);
    c.seed = 2025;
    EXPECT_NE(a, sweep_csv(sweep(c), false));
}

TEST(Sweep, CellsIndependentOfOrder) {
    SweepConfig c{k4c4(), {}, {14}, {Rational(1), Rational(2)}, 8, 5, kDefaultBudget, TrialMode::ColorOnly};
    auto a = sweep(c);
    std::reverse(c.bs.begin(), c.bs.end());
    auto b = sweep(c);
    ASSERT_EQ(a.cells.size(), 2u);
    EXPECT_EQ(sweep_csv_row(a.cells[0], false), sweep_csv_row(b.cells[1], false));
    EXPECT_EQ(sweep_csv_row(a.cells[1], false), sweep_csv_row(b.cells[0], false));
}

TEST(TrialMode, RoundTrip) {
    for (auto m : {TrialMode::ColorOnly, TrialMode::ColorPlusOracle, TrialMode::FullPipeline})
        EXPECT_EQ(parse_trial_mode(to_string(m)), m);
    EXPECT_THROW(parse_trial_mode("x"), std::invalid_argument);
}
