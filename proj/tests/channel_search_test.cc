#include "infomask/channel_search.h"

#include <cmath>
#include <set>

#include "infomask/region_single_letter.h"
#include "test_util.h"

namespace infomask {
namespace {

using testing::ReferenceJoint;

void ExpectValidChannel(const AuxChannel& ch) {
  for (int i = 0; i < ch.input_size(); ++i) {
    double s = 0.0;
    for (double v : ch.row(i)) {
      EXPECT_GE(v, 0.0);
      s += v;
    }
    EXPECT_NEAR(s, 1.0, 1e-9);
  }
}

TEST(SimplexGridTest, BinaryK4) {
  const auto grid = EnumerateSimplex(2, 4);
  ASSERT_EQ(grid.size(), 5u);
  const double expected[5][2] = {{0, 1}, {0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}, {1, 0}};
  for (int i = 0; i < 5; ++i) {
    EXPECT_DOUBLE_EQ(grid[i][0], expected[i][0]);
    EXPECT_DOUBLE_EQ(grid[i][1], expected[i][1]);
  }
}

TEST(SimplexGridTest, CountsMatchBinomial) {
  EXPECT_EQ(EnumerateSimplex(3, 4).size(), 15u);
  EXPECT_EQ(EnumerateSimplex(1, 9).size(), 1u);
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 8; ++k) {
      const auto grid = EnumerateSimplex(m, k);
      EXPECT_EQ(grid.size(), SimplexGridCount(m, k));
      std::set<std::vector<double>> distinct;
      for (const Pmf& p : grid) {
        distinct.insert(std::vector<double>(p.probs().begin(), p.probs().end()));
        for (double v : p.probs()) EXPECT_NEAR(v * k, std::round(v * k), 1e-12);
      }
      EXPECT_EQ(distinct.size(), grid.size());
    }
  }
}

TEST(SimplexGridTest, SizeGuard) {
  EXPECT_INFOMASK_ERROR(EnumerateSimplex(6, 200), ErrorCode::kSizeGuard);
  EXPECT_INFOMASK_ERROR(EnumerateSimplex(3, 4, 10), ErrorCode::kSizeGuard);
  EXPECT_INFOMASK_ERROR(EnumerateChannels(4, 4, 30, 1'000'000), ErrorCode::kSizeGuard);
}

TEST(EnumerateChannelsTest, Counts) {
  const auto det = EnumerateChannels(2, 2, 1);
  EXPECT_EQ(det.size(), 4u);
  for (const auto& ch : det) {
    for (int i = 0; i < 2; ++i) EXPECT_TRUE(ch(i, 0) == 1.0 || ch(i, 1) == 1.0);
  }
  EXPECT_EQ(EnumerateChannels(2, 3, 4).size(), 225u);
  EXPECT_EQ(EnumerateChannels(1, 2, 2).size(), 3u);
  for (const auto& ch : EnumerateChannels(3, 3, 3)) ExpectValidChannel(ch);
}

TEST(EnumerateChannelsTest, FirstRowVariesSlowest) {
  const auto chans = EnumerateChannels(2, 2, 1);
  EXPECT_EQ(chans[0], AuxChannel(2, 2, {0, 1, 0, 1}));
  EXPECT_EQ(chans[1], AuxChannel(2, 2, {0, 1, 1, 0}));
  EXPECT_EQ(chans[2], AuxChannel(2, 2, {1, 0, 0, 1}));
}

TEST(SampleChannelTest, SingleOutputIsConstant) {
  Rng rng(1);
  EXPECT_EQ(SampleChannel(3, 1, rng), AuxChannel::Constant(3, 1));
}

TEST(SampleChannelTest, Determinism) {
  Rng a(42), b(42);
  EXPECT_EQ(SampleChannel(2, 3, a), SampleChannel(2, 3, b));
  Rng base(42);
  Rng f1 = base.Fork();
  Rng f2 = base.Fork();
  EXPECT_FALSE(SampleChannel(2, 3, f1) == SampleChannel(2, 3, f2));
}

TEST(SampleChannelTest, RowMeansAreUniform) {
  Rng rng(2024);
  constexpr int kSamples = 10'000;
  std::vector<double> mean(6, 0.0);
  for (int s = 0; s < kSamples; ++s) {
    const AuxChannel ch = SampleChannel(2, 3, rng);
    ExpectValidChannel(ch);
    for (int k = 0; k < 6; ++k) mean[k] += ch.data()[k] / kSamples;
  }
  for (double m : mean) EXPECT_NEAR(m, 1.0 / 3.0, 0.02);
}

TEST(ProjectToSimplexTest, ProjectsOntoSimplex) {
  std::vector<double> v{0.9, 0.4, -0.2};
  ProjectToSimplex(v);
  EXPECT_NEAR(v[0], 0.75, 1e-12);
  EXPECT_NEAR(v[1], 0.25, 1e-12);
  EXPECT_EQ(v[2], 0.0);
  std::vector<double> inside{0.2, 0.3, 0.5};
  ProjectToSimplex(inside);
  EXPECT_NEAR(inside[0], 0.2, 1e-12);
  EXPECT_NEAR(inside[2], 0.5, 1e-12);
}

TEST(SearchConfigTest, Validate) {
  SearchConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.grid_resolution = 0;
  EXPECT_INFOMASK_ERROR(cfg.Validate(), ErrorCode::kInvalidArgument);
  cfg = SearchConfig{};
  cfg.refine_step_size = 0.0;
  EXPECT_INFOMASK_ERROR(cfg.Validate(), ErrorCode::kInvalidArgument);
  cfg.refine_step_size = 1.5;
  EXPECT_INFOMASK_ERROR(cfg.Validate(), ErrorCode::kInvalidArgument);
}

ChannelObjective Quadratic() {
  return [](const AuxChannel& ch) {
    double v = 0.0;
    for (int i = 0; i < ch.input_size(); ++i) {
      const double d = ch(i, 0) - 0.3;
      v += d * d;
    }
    return Score{v, true};
  };
}

TEST(LocalRefineTest, ZeroStepsKeepsStart) {
  Rng rng(0);
  const AuxChannel start(2, 2, {0.9, 0.1, 0.6, 0.4});
  const RefineResult r = LocalRefine(Quadratic(), start, 0, 0.05, rng);
  EXPECT_EQ(r.channel, start);
  EXPECT_TRUE(r.trace.empty());
}

TEST(LocalRefineTest, MonotoneOnConvexQuadratic) {
  Rng rng(0);
  const AuxChannel start(2, 2, {0.9, 0.1, 0.6, 0.4});
  const double initial = Quadratic()(start).value;
  const RefineResult r = LocalRefine(Quadratic(), start, 300, 0.05, rng);
  EXPECT_LE(r.score.value, initial);
  EXPECT_LT(r.score.value, 1e-3);
  ASSERT_EQ(r.trace.size(), 300u);
  for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_LE(r.trace[i], r.trace[i - 1]);
  ExpectValidChannel(r.channel);
}

TEST(LocalRefineTest, InfeasibleStart) {
  Rng rng(0);
  const ChannelObjective never = [](const AuxChannel&) { return Score{0.0, false}; };
  EXPECT_INFOMASK_ERROR(LocalRefine(never, AuxChannel::Identity(2), 10, 0.1, rng),
                        ErrorCode::kInfeasibleStart);
}

TEST(LocalRefineTest, StaysFeasible) {
  Rng rng(8);
  const ChannelObjective obj = [](const AuxChannel& ch) {
    return Score{-ch(0, 0), ch(0, 0) <= 0.6};
  };
  const RefineResult r = LocalRefine(obj, AuxChannel(1, 2, {0.2, 0.8}), 200, 0.1, rng);
  EXPECT_LE(r.channel(0, 0), 0.6);
  EXPECT_GT(r.channel(0, 0), 0.5);
}

TEST(LocalRefineTest, ReducesLeakageFromIdentity) {
  const JointPmf j = ReferenceJoint();
  const ChannelObjective leak = [&](const AuxChannel& ch) {
    return Score{ComputeAmCoordinates(j, ch).i_yu, true};
  };
  Rng rng(0);
  const RefineResult r = LocalRefine(leak, AuxChannel::Identity(2), 100, 0.05, rng);
  EXPECT_LT(r.score.value, JointEntropy(j, {"Y"}) - 1e-6);
}

TEST(LocalRefineTest, Reproducible) {
  Rng a(77), b(77);
  const AuxChannel start(3, 2, {0.5, 0.5, 0.1, 0.9, 0.8, 0.2});
  const RefineResult ra = LocalRefine(Quadratic(), start, 50, 0.1, a);
  const RefineResult rb = LocalRefine(Quadratic(), start, 50, 0.1, b);
  EXPECT_EQ(ra.channel, rb.channel);
  EXPECT_EQ(ra.trace, rb.trace);
}

}  // namespace
}  // namespace infomask
