#include "infomask/region_aa.h"

#include <algorithm>
#include <cmath>

#include "infomask/simplex_lp.h"

namespace infomask {
namespace {

const AxisSet kX{std::string(kAxisX)};
const AxisSet kY{std::string(kAxisY)};
const AxisSet kUx{std::string(kAxisUx)};
const AxisSet kUy{std::string(kAxisUy)};
const AxisSet kXY{std::string(kAxisX), std::string(kAxisY)};
const AxisSet kUxUy{std::string(kAxisUx), std::string(kAxisUy)};

std::size_t ZeroColumn(const AaCloud& cloud) {
  for (std::size_t i = 0; i < cloud.vectors.size(); ++i) {
    const AaVector& v = cloud.vectors[i];
    if (v.a <= 0.0 && v.b <= 0.0 && v.c <= 0.0) return i;
  }
  throw Error(ErrorCode::kDegenerateLp, "cloud lacks the all-zero vector");
}

}  // namespace

AaVector ComputeAaVector(const JointPmf& j, const AuxChannel& chx,
                         const AuxChannel& chy) {
  const int nx = j.size_of(kAxisX);
  const int ny = j.size_of(kAxisY);
  if (chx.output_size() > nx || chy.output_size() > ny) {
    throw Error(ErrorCode::kDimensionMismatch, "auxiliary alphabet exceeds its bound");
  }
  const JointPmf full =
      AttachChannel(AttachChannel(j, kAxisX, chx, kAxisUx), kAxisY, chy, kAxisUy);
  AaVector v;
  v.a = MutualInformation(full, kUx, kX, kUy);
  v.b = MutualInformation(full, kUy, kY, kUx);
  v.c = MutualInformation(full, kUxUy, kXY);
  v.dx = MutualInformation(full, kX, kUxUy);
  v.dy = MutualInformation(full, kY, kUxUy);
  return v;
}

AaCloud BuildAaCloud(const JointPmf& j, const SearchConfig& cfg) {
  cfg.Validate();
  const int nx = j.size_of(kAxisX);
  const int ny = j.size_of(kAxisY);
  AaCloud cloud;
  cloud.config = cfg;

  const std::vector<AuxChannel> corners_x{AuxChannel::Constant(nx, nx),
                                          AuxChannel::Identity(nx)};
  const std::vector<AuxChannel> corners_y{AuxChannel::Constant(ny, ny),
                                          AuxChannel::Identity(ny)};
  const char* corner_names[] = {"constant", "identity"};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      cloud.vectors.push_back(ComputeAaVector(j, corners_x[a], corners_y[b]));
      cloud.provenance.push_back(std::string("corner:") + corner_names[a] + "/" +
                                 corner_names[b]);
    }
  }

  const auto grid_x = EnumerateChannels(nx, nx, cfg.grid_resolution, cfg.size_cap);
  const auto grid_y = EnumerateChannels(ny, ny, cfg.grid_resolution, cfg.size_cap);
  if (grid_x.size() * grid_y.size() > cfg.size_cap) {
    throw Error(ErrorCode::kSizeGuard, "channel pair grid exceeds the size cap");
  }
  auto is_corner = [](const AuxChannel& ch, const std::vector<AuxChannel>& corners) {
    return ch == corners[0] || ch == corners[1];
  };
  for (std::size_t a = 0; a < grid_x.size(); ++a) {
    for (std::size_t b = 0; b < grid_y.size(); ++b) {
      if (is_corner(grid_x[a], corners_x) && is_corner(grid_y[b], corners_y)) continue;
      cloud.vectors.push_back(ComputeAaVector(j, grid_x[a], grid_y[b]));
      cloud.provenance.push_back("grid:" + std::to_string(a) + "/" + std::to_string(b));
    }
  }

  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.random_samples; ++s) {
    const AuxChannel chx = SampleChannel(nx, nx, rng);
    const AuxChannel chy = SampleChannel(ny, ny, rng);
    cloud.vectors.push_back(ComputeAaVector(j, chx, chy));
    cloud.provenance.push_back("random:" + std::to_string(s));
  }
  return cloud;
}

AaSupportPoint AaSupport(const AaCloud& cloud, const RatePair& r, double weight_x,
                         double weight_y) {
  r.Validate();
  MixtureLp lp;
  lp.rows = 3;
  lp.rhs = {r.rx, r.ry, r.rx + r.ry};
  lp.coefficients.reserve(cloud.vectors.size() * 3);
  lp.objective.reserve(cloud.vectors.size());
  for (const AaVector& v : cloud.vectors) {
    lp.coefficients.insert(lp.coefficients.end(), {v.a, v.b, v.c});
    lp.objective.push_back(weight_x * v.dx + weight_y * v.dy);
  }
  const MixtureSolution sol = SolveMixtureLp(lp, ZeroColumn(cloud));
  AaSupportPoint p;
  p.weights = sol.weights;
  for (const auto& [idx, w] : sol.weights) {
    p.dx += w * cloud.vectors[idx].dx;
    p.dy += w * cloud.vectors[idx].dy;
  }
  return p;
}

Region2D AaRegion(const AaCloud& cloud, const RatePair& r, int directions) {
  if (cloud.vectors.empty()) {
    throw Error(ErrorCode::kDegenerateLp, "empty cloud");
  }
  if (directions < 0) throw Error(ErrorCode::kInvalidArgument, "negative sweep size");
  double x_cap = 0.0, y_cap = 0.0;
  for (const AaVector& v : cloud.vectors) {
    x_cap = std::max(x_cap, v.dx);
    y_cap = std::max(y_cap, v.dy);
  }
  // Axis directions carry a tiny secondary weight so ties resolve to the
  // Pareto-extreme point.
  constexpr double kTieBreak = 1e-9;
  std::vector<Point2> points{{0.0, 0.0}};
  auto add = [&](const AaSupportPoint& s) {
    const Point2 p{std::clamp(s.dx, 0.0, x_cap), std::clamp(s.dy, 0.0, y_cap)};
    points.push_back(p);
    points.push_back({p.x, 0.0});
    points.push_back({0.0, p.y});
  };
  add(AaSupport(cloud, r, 1.0, kTieBreak));
  add(AaSupport(cloud, r, kTieBreak, 1.0));
  for (int k = 1; k <= directions; ++k) {
    const double lambda = static_cast<double>(k) / (directions + 1);
    add(AaSupport(cloud, r, lambda, 1.0 - lambda));
  }
  return Region2D::Hull(std::move(points));
}

}  // namespace infomask
