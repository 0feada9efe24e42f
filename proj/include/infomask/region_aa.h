#ifndef INFOMASK_REGION_AA_H_
#define INFOMASK_REGION_AA_H_

#include <string>
#include <vector>

#include "infomask/channel_search.h"
#include "infomask/geometry.h"
#include "infomask/info_measures.h"
#include "infomask/region_single_letter.h"

namespace infomask {

// Constraint quantities of the double-amplification region for one pair of
// test channels p(ux|x), p(uy|y).
struct AaVector {
  double a = 0.0;   // I(Ux;X|Uy)
  double b = 0.0;   // I(Uy;Y|Ux)
  double c = 0.0;   // I(Ux,Uy;X,Y)
  double dx = 0.0;  // I(X;Ux,Uy)
  double dy = 0.0;  // I(Y;Ux,Uy)
};

// Throws kDimensionMismatch when the channels do not fit the alphabets or
// exceed |Ux| <= |X|, |Uy| <= |Y|.
AaVector ComputeAaVector(const JointPmf& j, const AuxChannel& chx,
                         const AuxChannel& chy);

struct AaCloud {
  std::vector<AaVector> vectors;
  std::vector<std::string> provenance;
  SearchConfig config;
};

// Corner pairs {constant, identity}^2 first, then every grid pair not already
// listed, then cfg.random_samples uniformly sampled pairs.
AaCloud BuildAaCloud(const JointPmf& j, const SearchConfig& cfg);

// Down-closed convex polygon of (delta_x, delta_y) pairs reachable by a
// time-shared mixture of cloud points within the rate budgets. One LP per
// direction (lambda, 1 - lambda) of a sweep with `directions` interior
// directions plus the two axis directions.
Region2D AaRegion(const AaCloud& cloud, const RatePair& r, int directions = 64);

// The mixture optimum for a single direction; exposed for testing.
struct AaSupportPoint {
  double dx = 0.0;
  double dy = 0.0;
  std::vector<std::pair<std::size_t, double>> weights;
};
AaSupportPoint AaSupport(const AaCloud& cloud, const RatePair& r, double weight_x,
                         double weight_y);

}  // namespace infomask

#endif  // INFOMASK_REGION_AA_H_
