#include "infomask/region_aa.h"

#include <cmath>

#include "test_util.h"

namespace infomask {
namespace {

using testing::ReferenceJoint;

JointPmf Independent() { return JointPmf::FromMatrix({{0.12, 0.28}, {0.18, 0.42}}); }

SearchConfig SmallCloud(int samples = 500) {
  SearchConfig cfg = SearchConfig::CloudDefaults();
  cfg.grid_resolution = 3;
  cfg.random_samples = samples;
  return cfg;
}

void ExpectVectorNear(const AaVector& v, const AaVector& w, double tol) {
  EXPECT_NEAR(v.a, w.a, tol);
  EXPECT_NEAR(v.b, w.b, tol);
  EXPECT_NEAR(v.c, w.c, tol);
  EXPECT_NEAR(v.dx, w.dx, tol);
  EXPECT_NEAR(v.dy, w.dy, tol);
}

const AaVector kIdentityPair{0.540852082973, 0.459147917027, 1.459147917027, 1.0,
                             0.918295834054};

TEST(AaVectorTest, ConstantPairIsZero) {
  ExpectVectorNear(
      ComputeAaVector(ReferenceJoint(), AuxChannel::Constant(2, 2), AuxChannel::Constant(2, 2)),
      AaVector{}, 1e-12);
}

TEST(AaVectorTest, IdentityPair) {
  ExpectVectorNear(
      ComputeAaVector(ReferenceJoint(), AuxChannel::Identity(2), AuxChannel::Identity(2)),
      kIdentityPair, 1e-11);
}

TEST(AaVectorTest, IndependentSourceFactorizes) {
  Rng rng(4);
  const JointPmf j = Independent();
  for (int trial = 0; trial < 50; ++trial) {
    const AuxChannel chx = SampleChannel(2, 2, rng);
    const AuxChannel chy = SampleChannel(2, 2, rng);
    const AaVector v = ComputeAaVector(j, chx, chy);
    const JointPmf full = AttachChannel(AttachChannel(j, "X", chx, "Ux"), "Y", chy, "Uy");
    const double ix = MutualInformation(full, {"Ux"}, {"X"});
    const double iy = MutualInformation(full, {"Uy"}, {"Y"});
    EXPECT_NEAR(v.a, ix, 1e-12);
    EXPECT_NEAR(v.b, iy, 1e-12);
    EXPECT_NEAR(v.c, ix + iy, 1e-12);
    EXPECT_NEAR(v.dx, ix, 1e-12);
    EXPECT_NEAR(v.dy, iy, 1e-12);
  }
}

TEST(AaVectorTest, Invariants) {
  Rng rng(6);
  const JointPmf j = ReferenceJoint();
  for (int trial = 0; trial < 100; ++trial) {
    const AuxChannel chx = SampleChannel(2, 2, rng);
    const AuxChannel chy = SampleChannel(2, 2, rng);
    const AaVector v = ComputeAaVector(j, chx, chy);
    EXPECT_LE(v.dx, v.c + 1e-9);
    EXPECT_LE(v.dy, v.c + 1e-9);
    EXPECT_LE(v.a, v.c + 1e-9);
    EXPECT_LE(v.b, v.c + 1e-9);
    const JointPmf full = AttachChannel(AttachChannel(j, "X", chx, "Ux"), "Y", chy, "Uy");
    EXPECT_LE(MutualInformation(full, {"Ux"}, {"Uy", "Y"}, {"X"}), 1e-12);
    EXPECT_LE(MutualInformation(full, {"Uy"}, {"Ux", "X"}, {"Y"}), 1e-12);
  }
}

TEST(AaVectorTest, CardinalityAndShapeChecks) {
  EXPECT_INFOMASK_ERROR(
      ComputeAaVector(ReferenceJoint(), AuxChannel::Constant(2, 3), AuxChannel::Identity(2)),
      ErrorCode::kDimensionMismatch);
  EXPECT_INFOMASK_ERROR(
      ComputeAaVector(ReferenceJoint(), AuxChannel::Identity(2), AuxChannel::Identity(3)),
      ErrorCode::kDimensionMismatch);
}

TEST(AaCloudTest, DeterministicGridHasSixteenPairs) {
  SearchConfig cfg;
  cfg.grid_resolution = 1;
  cfg.random_samples = 0;
  const AaCloud cloud = BuildAaCloud(ReferenceJoint(), cfg);
  EXPECT_EQ(cloud.vectors.size(), 16u);
  EXPECT_EQ(cloud.provenance.size(), 16u);
  ExpectVectorNear(cloud.vectors[0], AaVector{}, 1e-12);
}

TEST(AaCloudTest, DefaultCloudHoldsCorners) {
  const AaCloud cloud = BuildAaCloud(ReferenceJoint(), SearchConfig::CloudDefaults());
  EXPECT_EQ(cloud.vectors.size(), 2401u + 20000u);
  bool zero = false, identity = false;
  for (const AaVector& v : cloud.vectors) {
    zero = zero || (v.a <= 1e-12 && v.b <= 1e-12 && v.c <= 1e-12);
    identity = identity || (std::abs(v.c - kIdentityPair.c) <= 1e-9 &&
                            std::abs(v.a - kIdentityPair.a) <= 1e-9 &&
                            std::abs(v.dx - kIdentityPair.dx) <= 1e-9);
  }
  EXPECT_TRUE(zero);
  EXPECT_TRUE(identity);
}

TEST(AaCloudTest, SizeGuard) {
  SearchConfig cfg = SmallCloud(0);
  cfg.grid_resolution = 40;
  cfg.size_cap = 1000;
  EXPECT_INFOMASK_ERROR(BuildAaCloud(ReferenceJoint(), cfg), ErrorCode::kSizeGuard);
}

TEST(AaRegionTest, ZeroRatesGiveOrigin) {
  const Region2D r = AaRegion(BuildAaCloud(ReferenceJoint(), SmallCloud()), {0.0, 0.0});
  ASSERT_EQ(r.vertices().size(), 1u);
  EXPECT_NEAR(r.vertices()[0].x, 0.0, 1e-12);
  EXPECT_NEAR(r.vertices()[0].y, 0.0, 1e-12);
}

TEST(AaRegionTest, HighRatesReachFullCorner) {
  const Region2D r = AaRegion(BuildAaCloud(ReferenceJoint(), SmallCloud()), {1.46, 1.46});
  EXPECT_TRUE(Contains(r, {1.0, 0.918295834054}, 1e-9));
}

TEST(AaRegionTest, AxisSupportMonotoneInRx) {
  const AaCloud cloud = BuildAaCloud(ReferenceJoint(), SmallCloud());
  double prev = -1.0;
  for (double rx = 0.0; rx <= 1.2; rx += 0.1) {
    const AaSupportPoint s = AaSupport(cloud, {rx, 0.3}, 1.0, 0.0);
    EXPECT_GE(s.dx, prev - 1e-12);
    prev = s.dx;
  }
}

TEST(AaRegionTest, SupportWeightsMeetBudgets) {
  const AaCloud cloud = BuildAaCloud(ReferenceJoint(), SmallCloud());
  const RatePair r{0.4, 0.4};
  for (double lambda : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    const AaSupportPoint s = AaSupport(cloud, r, lambda, 1.0 - lambda);
    double a = 0, b = 0, c = 0, dx = 0, dy = 0, total = 0;
    for (const auto& [idx, w] : s.weights) {
      const AaVector& v = cloud.vectors[idx];
      a += w * v.a;
      b += w * v.b;
      c += w * v.c;
      dx += w * v.dx;
      dy += w * v.dy;
      total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_LE(a, r.rx + 1e-9);
    EXPECT_LE(b, r.ry + 1e-9);
    EXPECT_LE(c, r.rx + r.ry + 1e-9);
    EXPECT_NEAR(dx, s.dx, 1e-9);
    EXPECT_NEAR(dy, s.dy, 1e-9);
    EXPECT_LE(s.weights.size(), 4u);
  }
}

TEST(AaRegionTest, MonotoneInRatesAndCloud) {
  const AaCloud small = BuildAaCloud(ReferenceJoint(), SmallCloud(200));
  const AaCloud big = BuildAaCloud(ReferenceJoint(), SmallCloud(2000));
  const Region2D low = AaRegion(small, {0.3, 0.3});
  EXPECT_TRUE(ContainedIn(low, AaRegion(small, {0.4, 0.5}), 5e-3));
  EXPECT_TRUE(ContainedIn(low, AaRegion(big, {0.3, 0.3}), 5e-3));
}

TEST(AaRegionTest, DownClosedConvexAndBoxed) {
  const Region2D r = AaRegion(BuildAaCloud(ReferenceJoint(), SmallCloud()), {0.4, 0.4});
  EXPECT_GE(r.ConvexityResidual(), -1e-9);
  Rng rng(1);
  for (const Point2& v : r.vertices()) {
    EXPECT_GE(v.x, -1e-12);
    EXPECT_GE(v.y, -1e-12);
    EXPECT_LE(v.x, 1.0 + 1e-9);
    EXPECT_LE(v.y, 0.918295834054 + 1e-9);
    for (int k = 0; k < 20; ++k) {
      EXPECT_TRUE(Contains(r, {v.x * rng.Uniform(), v.y * rng.Uniform()}, 1e-9));
    }
  }
}

}  // namespace
}  // namespace infomask
