#include "infomask/region_single_letter.h"

#include <cmath>

#include "test_util.h"

namespace infomask {
namespace {

using testing::ReferenceJoint;

constexpr double kHy = 0.918295834054;
constexpr double kIxy = 0.459147917027;

JointPmf Independent() { return JointPmf::FromMatrix({{0.12, 0.28}, {0.18, 0.42}}); }
JointPmf Equal() { return JointPmf::FromMatrix({{0.5, 0.0}, {0.0, 0.5}}); }

void ExpectCurveShape(const TradeoffCurve& c, double h_masked) {
  ASSERT_FALSE(c.points.empty());
  EXPECT_EQ(c.points.front().delta_a, 0.0);
  EXPECT_NEAR(c.points.back().delta_a, c.domain_max, 1e-12);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    EXPECT_GE(c.points[i].delta_m_min, 0.0);
    EXPECT_LE(c.points[i].delta_m_min, h_masked + 1e-12);
    if (i == 0) continue;
    EXPECT_GT(c.points[i].delta_a, c.points[i - 1].delta_a);
    EXPECT_GE(c.points[i].delta_m_min, c.points[i - 1].delta_m_min - 1e-12);
  }
  for (std::size_t i = 1; i + 1 < c.points.size(); ++i) {
    const auto& a = c.points[i - 1];
    const auto& b = c.points[i];
    const auto& d = c.points[i + 1];
    const double cross = (b.delta_a - a.delta_a) * (d.delta_m_min - a.delta_m_min) -
                         (b.delta_m_min - a.delta_m_min) * (d.delta_a - a.delta_a);
    EXPECT_GE(cross, -1e-9) << "not convex at " << b.delta_a;
  }
}

TEST(AmCoordinatesTest, ConstantAndIdentity) {
  const AmCoordinates constant = ComputeAmCoordinates(ReferenceJoint(), AuxChannel::Constant(2, 3));
  EXPECT_NEAR(constant.i_xu, 0.0, 1e-12);
  EXPECT_NEAR(constant.i_yu, 0.0, 1e-12);
  EXPECT_NEAR(constant.i_y_ux, kIxy, 1e-11);
  EXPECT_NEAR(constant.h_x, 1.0, 1e-12);
  const AmCoordinates same = ComputeAmCoordinates(ReferenceJoint(), AuxChannel::Identity(2));
  EXPECT_NEAR(same.i_xu, kIxy, 1e-11);
  EXPECT_NEAR(same.i_yu, kHy, 1e-11);
  EXPECT_NEAR(same.i_y_ux, kHy, 1e-11);
  EXPECT_NEAR(same.h_x, 1.0, 1e-12);
}

TEST(AmCoordinatesTest, DefaultChannelValues) {
  const AmCoordinates c = ComputeAmCoordinates(ReferenceJoint(), testing::DefaultChannel());
  EXPECT_NEAR(c.i_yu, 0.168590632192, 1e-11);
  EXPECT_NEAR(c.i_xu, 0.084295316096, 1e-11);
  EXPECT_NEAR(c.i_y_ux, 0.543443233123, 1e-11);
}

TEST(AmCoordinatesTest, IndependenceAndInvariants) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const AuxChannel ch = SampleChannel(2, 3, rng);
    const AmCoordinates ind = ComputeAmCoordinates(Independent(), ch);
    EXPECT_NEAR(ind.i_xu, 0.0, 1e-12);
    EXPECT_NEAR(ind.i_y_ux, ind.i_yu, 1e-12);
    const AmCoordinates c = ComputeAmCoordinates(ReferenceJoint(), ch);
    EXPECT_LE(c.i_yu, c.i_y_ux + 1e-9);
    EXPECT_LE(c.i_xu, std::min(c.h_x, c.i_y_ux) + 1e-9);
  }
}

TEST(AmCoordinatesTest, DimensionMismatch) {
  EXPECT_INFOMASK_ERROR(ComputeAmCoordinates(ReferenceJoint(), AuxChannel::Identity(3)),
                        ErrorCode::kDimensionMismatch);
}

TEST(AmFeasibleTest, Examples) {
  const AmCoordinates c = ComputeAmCoordinates(ReferenceJoint(), AuxChannel::Constant(2, 2));
  EXPECT_TRUE(AmFeasible(c, {1.0, 0.0}, 1.0, 0.459148));
  EXPECT_FALSE(AmFeasible(c, {1.0, 0.0}, 1.0, 0.40));
  EXPECT_FALSE(AmFeasible(c, {5.0, 5.0}, c.h_x + 0.1, 1.0));
  EXPECT_FALSE(AmFeasible(c, {0.5, 0.0}, 0.6, 1.0));
}

TEST(AmCurveTest, IndependentSourceHasZeroMasking) {
  const TradeoffCurve c = AmCurve(Independent(), {0.3, 0.0});
  EXPECT_NEAR(c.domain_max, 0.3, 1e-9);
  for (const auto& p : c.points) EXPECT_LE(p.delta_m_min, 1e-9);
}

TEST(AmCurveTest, EqualSourcesGiveDiagonal) {
  const TradeoffCurve c = AmCurve(Equal(), {1.0, 1.0});
  EXPECT_NEAR(c.domain_max, 1.0, 1e-9);
  for (const auto& p : c.points) {
    EXPECT_GE(p.delta_m_min, p.delta_a - 1e-9);
    EXPECT_NEAR(p.delta_m_min, p.delta_a, 0.01);
  }
}

TEST(AmCurveTest, ReferenceCurveShape) {
  const TradeoffCurve c = AmCurve(ReferenceJoint(), {0.4, 0.4});
  ExpectCurveShape(c, kHy);
  EXPECT_LT(c.domain_max, 1.0);
  EXPECT_GT(c.domain_max, 0.4);
  EXPECT_EQ(c.raw.size(), c.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    EXPECT_LE(c.points[i].delta_m_min, c.raw[i].delta_m_min + 1e-12);
  }
}

TEST(AmCurveTest, WitnessesAreFeasibleAtTheirPoints) {
  const RatePair r{0.4, 0.4};
  const TradeoffCurve c = AmCurve(ReferenceJoint(), r);
  ASSERT_EQ(c.witnesses.size(), c.raw.size());
  for (std::size_t i = 0; i < c.raw.size(); ++i) {
    EXPECT_TRUE(AmFeasible(c.witnesses[i], r, c.raw[i].delta_a, c.raw[i].delta_m_min));
  }
}

TEST(AmCurveTest, MonotoneInRates) {
  const TradeoffCurve low = AmCurve(ReferenceJoint(), {0.3, 0.2});
  const TradeoffCurve high = AmCurve(ReferenceJoint(), {0.5, 0.6});
  EXPECT_GE(high.domain_max, low.domain_max - 0.01);
  for (const auto& p : low.points) EXPECT_LE(high.ValueAt(p.delta_a), p.delta_m_min + 0.01);
}

TEST(AmCurveTest, LargerAuxAlphabetChangesLittle) {
  CurveOptions three, four;
  three.aux_size = 3;
  four.aux_size = 4;
  const TradeoffCurve a = AmCurve(ReferenceJoint(), {0.4, 0.4}, {}, three);
  const TradeoffCurve b = AmCurve(ReferenceJoint(), {0.4, 0.4}, {}, four);
  EXPECT_NEAR(a.domain_max, b.domain_max, 0.01);
  for (const auto& p : a.points) EXPECT_NEAR(b.ValueAt(p.delta_a), p.delta_m_min, 0.01);
}

TEST(AmCurveTest, Deterministic) {
  SearchConfig cfg;
  cfg.seed = 5;
  const TradeoffCurve a = AmCurve(ReferenceJoint(), {0.4, 0.4}, cfg);
  const TradeoffCurve b = AmCurve(ReferenceJoint(), {0.4, 0.4}, cfg);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].delta_a, b.points[i].delta_a);
    EXPECT_EQ(a.points[i].delta_m_min, b.points[i].delta_m_min);
  }
}

TEST(AmCurveTest, RejectsBadInput) {
  EXPECT_INFOMASK_ERROR(AmCurve(ReferenceJoint(), {-0.1, 0.4}), ErrorCode::kInvalidArgument);
  SearchConfig cfg;
  cfg.grid_resolution = 0;
  EXPECT_INFOMASK_ERROR(AmCurve(ReferenceJoint(), {0.4, 0.4}, cfg), ErrorCode::kInvalidArgument);
}

TEST(MaCurveTest, SymmetricSourceMatchesAm) {
  const JointPmf sym = JointPmf::FromMatrix({{0.4, 0.1}, {0.1, 0.4}});
  const TradeoffCurve am = AmCurve(sym, {0.3, 0.3});
  const TradeoffCurve ma = MaCurve(sym, {0.3, 0.3});
  EXPECT_NEAR(am.domain_max, ma.domain_max, 0.01);
  for (const auto& p : am.points) EXPECT_NEAR(ma.ValueAt(p.delta_a), p.delta_m_min, 0.01);
}

TEST(MaCurveTest, IndependentSourceMirrors) {
  const TradeoffCurve c = MaCurve(Independent(), {0.0, 0.5});
  EXPECT_NEAR(c.domain_max, 0.5, 1e-9);
  for (const auto& p : c.points) EXPECT_LE(p.delta_m_min, 1e-9);
}

TEST(MaCurveTest, ReferenceCurveShape) {
  const TradeoffCurve c = MaCurve(ReferenceJoint(), {0.5, 0.6});
  ExpectCurveShape(c, 1.0);
  EXPECT_LE(c.domain_max, std::min(kHy, 0.6 + kIxy) + 1e-9);
}

TEST(RmMinMaskingTest, Examples) {
  const auto full = RmMinMasking(ReferenceJoint(), {1.0, 0.0});
  ASSERT_TRUE(full.has_value());
  EXPECT_NEAR(*full, kIxy, 1e-9);
  EXPECT_FALSE(RmMinMasking(ReferenceJoint(), {0.0, 2.0}).has_value());
  const auto ind = RmMinMasking(Independent(), {1.0, 0.3});
  ASSERT_TRUE(ind.has_value());
  EXPECT_NEAR(*ind, 0.0, 1e-9);
}

TEST(RmMinMaskingTest, FeasibleOnlyAboveConditionalEntropy) {
  // min over U of H(X|U) is H(X|Y) = 0.540852, reached by U = Y.
  EXPECT_FALSE(RmMinMasking(ReferenceJoint(), {0.5, 2.0}).has_value());
  const auto m = RmMinMasking(ReferenceJoint(), {0.55, 2.0});
  ASSERT_TRUE(m.has_value());
  EXPECT_LE(*m, kHy + 1e-9);
}

TEST(ListExponentTest, Values) {
  EXPECT_DOUBLE_EQ(ListExponent(1.0, ReferenceJoint()), 0.0);
  EXPECT_DOUBLE_EQ(ListExponent(0.0, ReferenceJoint()), 1.0);
  EXPECT_NEAR(ListExponent(0.7, ReferenceJoint()), 0.3, 1e-12);
  EXPECT_INFOMASK_ERROR(ListExponent(1.1, ReferenceJoint()), ErrorCode::kOutOfRange);
  EXPECT_INFOMASK_ERROR(ListExponent(-0.1, ReferenceJoint()), ErrorCode::kOutOfRange);
}

}  // namespace
}  // namespace infomask
