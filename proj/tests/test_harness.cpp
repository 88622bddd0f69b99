#include <gtest/gtest.h>

#include <cmath>

#include "turnpike/harness.hpp"
#include "turnpike/text_format.hpp"

using namespace turnpike;

TEST(GenInstance, FullSet) { EXPECT_EQ(gen_instance(5, 5, 123), (IntegerSet{0, 1, 2, 3, 4})); }

TEST(GenInstance, PinnedRegression) {
  const IntegerSet v = gen_instance(1024, 8, 42);
  EXPECT_EQ(format_set(v), "152 398 585 658 726 738 967 976");
  EXPECT_EQ(gen_instance(1024, 8, 42), v);
}

TEST(GenInstance, RejectsKAboveN) { EXPECT_THROW(gen_instance(4, 8, 1), std::domain_error); }

TEST(GenInstance, HugeAmbientRange) {
  const IntegerSet v = gen_instance(Value{1} << 40, 16, 9);
  EXPECT_EQ(v.size(), 16u);
  EXPECT_LT(v.back(), Value{1} << 40);
}

TEST(GenInstance, InclusionFrequencyIsUniform) {
  constexpr int kDraws = 10000;
  constexpr Value kN = 32, kK = 4;
  std::vector<int> hits(kN, 0);
  for (int i = 0; i < kDraws; ++i) {
    const IntegerSet v = gen_instance(kN, kK, splitmix64(i));
    ASSERT_EQ(v.size(), kK);
    for (Value x : v) ++hits[x];
  }
  const double p = static_cast<double>(kK) / kN;
  const double mean = kDraws * p;
  const double sigma = std::sqrt(kDraws * p * (1 - p));
  for (Value x = 0; x < kN; ++x) EXPECT_NEAR(hits[x], mean, 3 * sigma) << "element " << x;
}

TEST(GenBernoulli, ExpectedSize) {
  double total = 0;
  for (int i = 0; i < 400; ++i) total += gen_bernoulli_instance(1000, 20, i).size();
  EXPECT_NEAR(total / 400, 20.0, 1.0);
}

TEST(TrialSeed, DependsOnEveryComponent) {
  const auto s = trial_seed(1, 2, 3, 4);
  EXPECT_NE(s, trial_seed(2, 2, 3, 4));
  EXPECT_NE(s, trial_seed(1, 3, 3, 4));
  EXPECT_NE(s, trial_seed(1, 2, 4, 4));
  EXPECT_NE(s, trial_seed(1, 2, 3, 5));
  EXPECT_EQ(s, trial_seed(1, 2, 3, 4));
}

TEST(RunTrial, TwoPointsAlwaysSucceed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_TRUE(run_trial(16, 2, seed, TrialMode::Linear).success);
    EXPECT_TRUE(run_trial(16, 2, seed, TrialMode::Circular).success);
  }
}

TEST(RunTrial, SeededBatchHasNoSoundnessViolations) {
  std::size_t successes = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const TrialResult r = run_trial(1024, 8, trial_seed(5, 1024, 8, i), TrialMode::Linear);
    EXPECT_FALSE(r.soundness_violation);
    successes += r.success;
  }
  EXPECT_GE(successes, 180u);
}

TEST(RunGrid, OneTrialPerCell) {
  const auto recs = run_grid({{64, 128}, {2, 3}, 1, 9, TrialMode::Linear});
  ASSERT_EQ(recs.size(), 4u);
  for (const TrialRecord& r : recs) {
    EXPECT_EQ(r.trials, 1u);
    EXPECT_TRUE(r.success_rate == 0.0 || r.success_rate == 1.0);
  }
  EXPECT_EQ(recs[0].n, 64u);
  EXPECT_EQ(recs[0].k, 2u);
  EXPECT_EQ(recs[3].n, 128u);
  EXPECT_EQ(recs[3].k, 3u);
}

TEST(RunGrid, RecordsSortedRegardlessOfInputOrder) {
  const auto recs = run_grid({{256, 128}, {6, 4}, 3, 1, TrialMode::Linear});
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].n, 128u);
  EXPECT_EQ(recs[0].k, 4u);
  EXPECT_EQ(recs[1].k, 6u);
}

TEST(RunGrid, InvalidGrids) {
  EXPECT_THROW(run_grid({{}, {2}, 1, 0, TrialMode::Linear}), std::domain_error);
  EXPECT_THROW(run_grid({{16}, {16}, 1, 0, TrialMode::Linear}), std::domain_error);
  EXPECT_THROW(run_grid({{16}, {2}, 0, 0, TrialMode::Linear}), std::domain_error);
}

TEST(RunGrid, ThreadCountDoesNotChangeRecords) {
  const TrialGrid grid{{256, 512}, {4, 8, 12}, 20, 77, TrialMode::Circular};
  const std::string one = emit_csv(run_grid(grid, 1));
  EXPECT_EQ(one, emit_csv(run_grid(grid, 4)));
  EXPECT_EQ(one, emit_csv(run_grid(grid, 7)));
}

TEST(EmitCsv, HeaderOnly) { EXPECT_EQ(emit_csv({}), "n,k,trials,successes,success_rate,mean_solve_micros\n"); }

TEST(EmitCsv, FormatsRates) {
  const std::vector<TrialRecord> recs{{512, 8, 200, 196, 0.98, 12.34, 0}};
  EXPECT_EQ(emit_csv(recs), "n,k,trials,successes,success_rate,mean_solve_micros\n512,8,200,196,0.9800,NA\n");
  EXPECT_EQ(emit_csv(recs, true), "n,k,trials,successes,success_rate,mean_solve_micros\n512,8,200,196,0.9800,12.3\n");
}

TEST(EmitPlotScript, ReferencesCsvAndEachN) {
  const std::string script = emit_plot_script("out.csv", {512, 1024});
  EXPECT_NE(script.find("set datafile separator ','"), std::string::npos);
  EXPECT_NE(script.find("'out.csv' every ::1 using 2:($1==512?$5:1/0)"), std::string::npos);
  EXPECT_NE(script.find("title 'n=1024'"), std::string::npos);
}
