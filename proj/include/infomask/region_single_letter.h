#ifndef INFOMASK_REGION_SINGLE_LETTER_H_
#define INFOMASK_REGION_SINGLE_LETTER_H_

#include <optional>
#include <vector>

#include "infomask/channel_search.h"
#include "infomask/info_measures.h"

namespace infomask {

inline constexpr double kFeasibilityTolerance = 1e-9;

struct RatePair {
  double rx = 0.0;
  double ry = 0.0;

  // Throws kInvalidArgument unless both rates are finite and >= 0.
  void Validate() const;
};

// The four single-letter quantities that define the amplification-masking
// region for a test channel p(u|y): I(X;U), I(Y;U), I(Y;U,X), H(X).
struct AmCoordinates {
  double i_xu = 0.0;
  double i_yu = 0.0;
  double i_y_ux = 0.0;
  double h_x = 0.0;
};

// `j` must be an {X, Y} joint; `ch` acts on Y.
AmCoordinates ComputeAmCoordinates(const JointPmf& j, const AuxChannel& ch);

// max{ I(Y;U,X) + delta_a - H(X), I(Y;U) }
double MaskingBound(const AmCoordinates& c, double delta_a);

// Membership of (rates, delta_a, delta_m) in the region generated by `c`.
bool AmFeasible(const AmCoordinates& c, const RatePair& r, double delta_a,
                double delta_m);

struct CurvePoint {
  double delta_a = 0.0;
  double delta_m_min = 0.0;
};

// Lower boundary of the (delta_a, delta_m) slice at fixed rates.
struct TradeoffCurve {
  std::vector<CurvePoint> points;  // convexified, strictly increasing delta_a
  double domain_max = 0.0;         // largest feasible delta_a

  // Pointwise search minimum before convexification, and the channel
  // coordinates that attained it.
  std::vector<CurvePoint> raw;
  std::vector<AmCoordinates> witnesses;

  // Piecewise-linear interpolation of `points`; clamps outside the domain.
  double ValueAt(double delta_a) const;
};

struct CurveOptions {
  int aux_size = 0;         // |U|; 0 means |Y| + 1
  int grid_points = 101;    // uniform delta_a grid on [0, H(X)]
  int refine_anchors = 11;  // delta_a values at which candidates are refined
};

// Amplify X, mask Y. Throws kEmptyRegion if no channel is feasible.
TradeoffCurve AmCurve(const JointPmf& j, const RatePair& r, const SearchConfig& cfg = {},
                      const CurveOptions& options = {});

// Amplify Y, mask X. `r.rx` still constrains the encoder observing X.
// The returned curve maps delta_y to the minimum delta_x.
TradeoffCurve MaCurve(const JointPmf& j, const RatePair& r, const SearchConfig& cfg = {},
                      const CurveOptions& options = {});

// Minimum of I(Y;X,U) subject to H(X|U) <= rx and I(Y;U) <= ry, i.e. the
// smallest leakage about Y compatible with near-lossless recovery of X.
// nullopt when no searched channel meets the rate constraints.
std::optional<double> RmMinMasking(const JointPmf& j, const RatePair& r,
                                   const SearchConfig& cfg = {}, int aux_size = 0);

// Normalized log list size H(X) - delta_a. Throws kOutOfRange.
double ListExponent(double delta_a, const JointPmf& j);

}  // namespace infomask

#endif  // INFOMASK_REGION_SINGLE_LETTER_H_
