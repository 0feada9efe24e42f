#include "infomask/region_single_letter.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace infomask {

void RatePair::Validate() const {
  if (!std::isfinite(rx) || !std::isfinite(ry) || rx < 0.0 || ry < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "rates must be finite and non-negative");
  }
}

namespace {

const AxisSet kX{std::string(kAxisX)};
const AxisSet kY{std::string(kAxisY)};
const AxisSet kU{std::string(kAxisU)};
const AxisSet kUX{std::string(kAxisU), std::string(kAxisX)};

void RequireXY(const JointPmf& j) {
  if (j.rank() != 2 || !j.has_axis(kAxisX) || !j.has_axis(kAxisY)) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a joint over {X, Y}");
  }
}

struct Candidate {
  AuxChannel channel;
  AmCoordinates coords;
};

// Grid channels followed by uniformly sampled ones; rate independent.
std::vector<Candidate> BuildPool(const JointPmf& j, int aux_size,
                                 const SearchConfig& cfg) {
  const int ny = j.size_of(kAxisY);
  std::vector<Candidate> pool;
  ForEachChannel(ny, aux_size, cfg.grid_resolution, cfg.size_cap,
                 [&](const AuxChannel& ch) {
                   pool.push_back({ch, ComputeAmCoordinates(j, ch)});
                 });
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.random_samples; ++s) {
    AuxChannel ch = SampleChannel(ny, aux_size, rng);
    AmCoordinates c = ComputeAmCoordinates(j, ch);
    pool.push_back({std::move(ch), c});
  }
  return pool;
}

// Refines the `starts` best feasible candidates under `objective` (scored on
// coordinates) and appends any improved channels to the pool.
void RefineInto(std::vector<Candidate>& pool, const JointPmf& j,
                const std::function<Score(const AmCoordinates&)>& objective,
                const SearchConfig& cfg, Rng& rng) {
  if (cfg.refine_starts == 0 || cfg.refine_steps == 0) return;
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Score s = objective(pool[i].coords);
    if (s.feasible) ranked.emplace_back(s.value, i);
  }
  const std::size_t take =
      std::min(ranked.size(), static_cast<std::size_t>(cfg.refine_starts));
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take),
                    ranked.end());
  const ChannelObjective on_channel = [&](const AuxChannel& ch) {
    return objective(ComputeAmCoordinates(j, ch));
  };
  std::vector<Candidate> refined;
  for (std::size_t k = 0; k < take; ++k) {
    const Candidate& start = pool[ranked[k].second];
    RefineResult res = LocalRefine(on_channel, start.channel, cfg.refine_steps,
                                   cfg.refine_step_size, rng);
    if (res.score.value < ranked[k].first) {
      AmCoordinates c = ComputeAmCoordinates(j, res.channel);
      refined.push_back({std::move(res.channel), c});
    }
  }
  for (auto& c : refined) pool.push_back(std::move(c));
}

// Lower convex hull of points sorted by x (Andrew's monotone chain).
std::vector<CurvePoint> LowerHull(const std::vector<CurvePoint>& pts) {
  std::vector<CurvePoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      const double cross = (b.delta_a - a.delta_a) * (p.delta_m_min - a.delta_m_min) -
                           (b.delta_m_min - a.delta_m_min) * (p.delta_a - a.delta_a);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

double Interpolate(const std::vector<CurvePoint>& pts, double x) {
  if (pts.empty()) return 0.0;
  if (x <= pts.front().delta_a) return pts.front().delta_m_min;
  if (x >= pts.back().delta_a) return pts.back().delta_m_min;
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](double v, const CurvePoint& p) { return v < p.delta_a; });
  const CurvePoint& hi = *it;
  const CurvePoint& lo = *(it - 1);
  const double t = (x - lo.delta_a) / (hi.delta_a - lo.delta_a);
  return lo.delta_m_min + t * (hi.delta_m_min - lo.delta_m_min);
}

}  // namespace

AmCoordinates ComputeAmCoordinates(const JointPmf& j, const AuxChannel& ch) {
  RequireXY(j);
  const JointPmf xyu = AttachChannel(j, kAxisY, ch, kAxisU);
  AmCoordinates c;
  c.i_xu = MutualInformation(xyu, kX, kU);
  c.i_yu = MutualInformation(xyu, kY, kU);
  c.i_y_ux = MutualInformation(xyu, kY, kUX);
  c.h_x = JointEntropy(xyu, kX);
  return c;
}

double MaskingBound(const AmCoordinates& c, double delta_a) {
  return std::max(c.i_y_ux + delta_a - c.h_x, c.i_yu);
}

bool AmFeasible(const AmCoordinates& c, const RatePair& r, double delta_a,
                double delta_m) {
  constexpr double tol = kFeasibilityTolerance;
  return r.rx >= delta_a - c.i_xu - tol && r.ry >= c.i_yu - tol &&
         delta_m >= MaskingBound(c, delta_a) - tol && delta_a <= c.h_x + tol;
}

double TradeoffCurve::ValueAt(double delta_a) const {
  return Interpolate(points, delta_a);
}

TradeoffCurve AmCurve(const JointPmf& j, const RatePair& r, const SearchConfig& cfg,
                      const CurveOptions& options) {
  RequireXY(j);
  r.Validate();
  cfg.Validate();
  if (options.grid_points < 2 || options.refine_anchors < 0) {
    throw Error(ErrorCode::kInvalidArgument, "curve grid needs at least 2 points");
  }
  const int aux = options.aux_size > 0 ? options.aux_size : j.size_of(kAxisY) + 1;
  constexpr double tol = kFeasibilityTolerance;
  const double h_x = JointEntropy(j, kX);
  const double h_y = JointEntropy(j, kY);

  std::vector<Candidate> pool = BuildPool(j, aux, cfg);
  auto rate_ok = [&](const AmCoordinates& c) { return c.i_yu <= r.ry + tol; };
  auto reach = [&](const AmCoordinates& c) { return std::min(c.h_x, r.rx + c.i_xu); };

  Rng rng = Rng(cfg.seed).Fork();
  // Push the feasibility frontier outwards first: maximize I(X;U).
  RefineInto(
      pool, j,
      [&](const AmCoordinates& c) { return Score{-c.i_xu, rate_ok(c)}; }, cfg, rng);

  auto domain_max = [&] {
    double best = -1.0;
    for (const auto& cand : pool) {
      if (rate_ok(cand.coords)) best = std::max(best, reach(cand.coords));
    }
    return best;
  };
  double dmax = domain_max();
  if (dmax < 0.0) {
    throw Error(ErrorCode::kEmptyRegion, "no searched channel meets the rate constraints");
  }

  for (int k = 0; k < options.refine_anchors; ++k) {
    const double anchor =
        options.refine_anchors == 1 ? 0.0 : dmax * k / (options.refine_anchors - 1);
    RefineInto(
        pool, j,
        [&](const AmCoordinates& c) {
          return Score{MaskingBound(c, anchor),
                       rate_ok(c) && anchor <= r.rx + c.i_xu + tol};
        },
        cfg, rng);
  }
  dmax = std::max(0.0, domain_max());

  std::vector<double> grid;
  for (int k = 0; k < options.grid_points; ++k) {
    const double d = h_x * k / (options.grid_points - 1);
    if (d > dmax + tol) break;
    grid.push_back(std::min(d, dmax));
  }
  if (grid.empty() || dmax - grid.back() > 1e-12) grid.push_back(dmax);

  TradeoffCurve curve;
  curve.domain_max = dmax;
  for (double d : grid) {
    double best = std::numeric_limits<double>::infinity();
    AmCoordinates witness;
    for (const auto& cand : pool) {
      if (!rate_ok(cand.coords) || reach(cand.coords) < d - tol) continue;
      const double m = MaskingBound(cand.coords, d);
      if (m < best) {
        best = m;
        witness = cand.coords;
      }
    }
    curve.raw.push_back({d, best});
    curve.witnesses.push_back(witness);
  }

  const std::vector<CurvePoint> hull = LowerHull(curve.raw);
  for (const auto& p : curve.raw) {
    const double v = std::clamp(Interpolate(hull, p.delta_a), 0.0, h_y);
    curve.points.push_back({p.delta_a, v});
  }
  return curve;
}

TradeoffCurve MaCurve(const JointPmf& j, const RatePair& r, const SearchConfig& cfg,
                      const CurveOptions& options) {
  RequireXY(j);
  CurveOptions swapped = options;
  if (swapped.aux_size == 0) swapped.aux_size = j.size_of(kAxisX) + 1;
  return AmCurve(SwapXY(j), RatePair{r.ry, r.rx}, cfg, swapped);
}

std::optional<double> RmMinMasking(const JointPmf& j, const RatePair& r,
                                   const SearchConfig& cfg, int aux_size) {
  RequireXY(j);
  r.Validate();
  cfg.Validate();
  const int aux = aux_size > 0 ? aux_size : j.size_of(kAxisY) + 1;
  constexpr double tol = kFeasibilityTolerance;
  std::vector<Candidate> pool = BuildPool(j, aux, cfg);
  const auto objective = [&](const AmCoordinates& c) {
    return Score{c.i_y_ux, c.h_x - c.i_xu <= r.rx + tol && c.i_yu <= r.ry + tol};
  };
  Rng rng = Rng(cfg.seed).Fork();
  RefineInto(pool, j, objective, cfg, rng);
  std::optional<double> best;
  for (const auto& cand : pool) {
    const Score s = objective(cand.coords);
    if (s.feasible && (!best || s.value < *best)) best = s.value;
  }
  return best;
}

double ListExponent(double delta_a, const JointPmf& j) {
  const double h_x = JointEntropy(j, {std::string(kAxisX)});
  if (!(delta_a >= 0.0) || delta_a > h_x + kFeasibilityTolerance) {
    throw Error(ErrorCode::kOutOfRange, "delta_a must lie in [0, H(X)]");
  }
  return std::max(h_x - delta_a, 0.0);
}

}  // namespace infomask
