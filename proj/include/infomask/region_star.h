#ifndef INFOMASK_REGION_STAR_H_
#define INFOMASK_REGION_STAR_H_

#include <map>
#include <string>
#include <string_view>

#include "infomask/geometry.h"
#include "infomask/multiletter.h"
#include "infomask/region_aa.h"
#include "infomask/region_single_letter.h"

namespace infomask {

enum class SliceOrientation {
  kAmplifyX,  // curve maps delta_x -> minimum delta_y
  kAmplifyY,  // curve maps delta_y -> minimum delta_x
};

// Region above the tradeoff curve and left of its domain frontier, capped at
// `h_masked` on the masked axis. Axes are mirrored for kAmplifyY.
Region2D SliceToRegion(const TradeoffCurve& curve, double h_masked,
                       SliceOrientation orientation);

struct StarConfig {
  SearchConfig curve;                                   // single-letter slices
  SearchConfig cloud = SearchConfig::CloudDefaults();   // double-amplification cloud
  CurveOptions curve_options;
  int directions = 64;
};

struct RegionBundle {
  Region2D am;
  Region2D ma;
  Region2D aa;
  Region2D star;
  RatePair rates;
  std::string dist_digest;
  std::string config_digest;
};

// am, ma and aa at the given rates, and their intersection.
RegionBundle StarRegion(const JointPmf& j, const RatePair& r, const StarConfig& cfg);

// Same, reusing a prebuilt cloud (the cloud does not depend on the rates).
RegionBundle StarRegion(const JointPmf& j, const RatePair& r, const StarConfig& cfg,
                        const AaCloud& cloud);

// 16 hex digits of FNV-1a over the canonical form of the input.
std::string DistributionDigest(const JointPmf& j);
std::string ConfigDigest(const StarConfig& cfg);

enum class ExportFormat { kCsv, kJson };

// Throws kUnsupportedFormat.
ExportFormat ParseExportFormat(std::string_view name);

// CSV: header `region,delta_x,delta_y`, one row per vertex in am, ma, aa,
// star order. JSON: rates, digests and per-region vertex arrays.
std::string ExportRegion(const RegionBundle& bundle, ExportFormat format);

// Inverse of the JSON export. Throws kParseError.
RegionBundle ImportRegionJson(std::string_view text);

// Inverse of the CSV export: region name -> polygon. Regions with no rows
// are absent. Throws kParseError.
std::map<std::string, Region2D> ImportRegionCsv(std::string_view text);

// Multi-letter operating points checked against the searched am slice as
// (ix, iy) and the ma slice as (iy, ix), each expanded by `tol`.
struct ContainmentReport {
  int checked = 0;
  int am_violations = 0;
  int ma_violations = 0;
  Region2D am;
  Region2D ma;
  bool contained() const { return am_violations == 0 && ma_violations == 0; }
};
ContainmentReport CheckContainment(const JointPmf& j, const std::vector<MultiLetterPoint>& points,
                                   const RatePair& r, const SearchConfig& cfg,
                                   const CurveOptions& options, double tol);

}  // namespace infomask

#endif  // INFOMASK_REGION_STAR_H_
