#include "infomask/region_star.h"

#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace infomask {
namespace {

constexpr const char* kRegionNames[] = {"am", "ma", "aa", "star"};

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class Fnv1a {
 public:
  void Add(std::string_view s) {
    for (unsigned char ch : s) {
      hash_ ^= ch;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;  // field separator
    hash_ *= 0x100000001b3ULL;
  }
  void Add(double v) { Add(FormatDouble(v)); }
  void Add(std::int64_t v) { Add(std::to_string(v)); }
  std::string Hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash_);
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

const Region2D& RegionByName(const RegionBundle& b, std::string_view name) {
  if (name == "am") return b.am;
  if (name == "ma") return b.ma;
  if (name == "aa") return b.aa;
  return b.star;
}

Region2D& RegionByName(RegionBundle& b, std::string_view name) {
  return const_cast<Region2D&>(RegionByName(static_cast<const RegionBundle&>(b), name));
}

void AddSearchConfig(Fnv1a& h, const SearchConfig& c) {
  h.Add(std::int64_t{c.grid_resolution});
  h.Add(std::int64_t{c.random_samples});
  h.Add(std::int64_t{c.refine_steps});
  h.Add(c.refine_step_size);
  h.Add(static_cast<std::int64_t>(c.seed));
  h.Add(std::int64_t{c.refine_starts});
  h.Add(static_cast<std::int64_t>(c.size_cap));
}

}  // namespace

Region2D SliceToRegion(const TradeoffCurve& curve, double h_masked,
                       SliceOrientation orientation) {
  std::vector<Point2> pts;
  pts.reserve(curve.points.size() + 2);
  auto emit = [&](double amplified, double masked) {
    if (orientation == SliceOrientation::kAmplifyX) {
      pts.push_back({amplified, masked});
    } else {
      pts.push_back({masked, amplified});
    }
  };
  for (const CurvePoint& p : curve.points) {
    emit(p.delta_a, std::min(p.delta_m_min, h_masked));
  }
  emit(curve.domain_max, h_masked);
  emit(0.0, h_masked);
  return Region2D::Hull(std::move(pts));
}

std::string DistributionDigest(const JointPmf& j) {
  Fnv1a h;
  for (const auto& a : j.axes()) h.Add(a);
  for (int s : j.sizes()) h.Add(std::int64_t{s});
  for (double p : j.probs()) h.Add(p);
  return h.Hex();
}

std::string ConfigDigest(const StarConfig& cfg) {
  Fnv1a h;
  AddSearchConfig(h, cfg.curve);
  AddSearchConfig(h, cfg.cloud);
  h.Add(std::int64_t{cfg.curve_options.aux_size});
  h.Add(std::int64_t{cfg.curve_options.grid_points});
  h.Add(std::int64_t{cfg.curve_options.refine_anchors});
  h.Add(std::int64_t{cfg.directions});
  return h.Hex();
}

RegionBundle StarRegion(const JointPmf& j, const RatePair& r, const StarConfig& cfg) {
  return StarRegion(j, r, cfg, BuildAaCloud(j, cfg.cloud));
}

RegionBundle StarRegion(const JointPmf& j, const RatePair& r, const StarConfig& cfg,
                        const AaCloud& cloud) {
  r.Validate();
  const double h_x = JointEntropy(j, {std::string(kAxisX)});
  const double h_y = JointEntropy(j, {std::string(kAxisY)});
  RegionBundle b;
  b.rates = r;
  b.dist_digest = DistributionDigest(j);
  b.config_digest = ConfigDigest(cfg);
  const Region2D box = Region2D::Box(h_x, h_y);
  b.am = Intersect(SliceToRegion(AmCurve(j, r, cfg.curve, cfg.curve_options), h_y,
                                 SliceOrientation::kAmplifyX),
                   box);
  b.ma = Intersect(SliceToRegion(MaCurve(j, r, cfg.curve, cfg.curve_options), h_x,
                                 SliceOrientation::kAmplifyY),
                   box);
  b.aa = Intersect(AaRegion(cloud, r, cfg.directions), box);
  b.star = Intersect(Intersect(b.am, b.ma), b.aa);
  return b;
}

ContainmentReport CheckContainment(const JointPmf& j, const std::vector<MultiLetterPoint>& points,
                                   const RatePair& r, const SearchConfig& cfg,
                                   const CurveOptions& options, double tol) {
  const double h_x = JointEntropy(j, {std::string(kAxisX)});
  const double h_y = JointEntropy(j, {std::string(kAxisY)});
  ContainmentReport rep;
  rep.am = SliceToRegion(AmCurve(j, r, cfg, options), h_y, SliceOrientation::kAmplifyX);
  rep.ma = SliceToRegion(MaCurve(j, r, cfg, options), h_x, SliceOrientation::kAmplifyY);
  for (const MultiLetterPoint& p : points) {
    ++rep.checked;
    // Both slices live in the (delta_x, delta_y) plane.
    if (!Contains(rep.am, {p.ix, p.iy}, tol)) ++rep.am_violations;
    if (!Contains(rep.ma, {p.ix, p.iy}, tol)) ++rep.ma_violations;
  }
  return rep;
}

ExportFormat ParseExportFormat(std::string_view name) {
  if (name == "csv" || name == "CSV") return ExportFormat::kCsv;
  if (name == "json" || name == "JSON") return ExportFormat::kJson;
  throw Error(ErrorCode::kUnsupportedFormat,
              "unsupported export format '" + std::string(name) + "'");
}

std::string ExportRegion(const RegionBundle& bundle, ExportFormat format) {
  if (format == ExportFormat::kCsv) {
    std::string out = "region,delta_x,delta_y\n";
    for (const char* name : kRegionNames) {
      for (const Point2& p : RegionByName(bundle, name).vertices()) {
        out += name;
        out += ',';
        out += FormatDouble(p.x);
        out += ',';
        out += FormatDouble(p.y);
        out += '\n';
      }
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["rates"] = {{"rx", bundle.rates.rx}, {"ry", bundle.rates.ry}};
  doc["dist_digest"] = bundle.dist_digest;
  doc["config_digest"] = bundle.config_digest;
  nlohmann::ordered_json regions = nlohmann::ordered_json::object();
  for (const char* name : kRegionNames) {
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const Point2& p : RegionByName(bundle, name).vertices()) {
      verts.push_back({p.x, p.y});
    }
    regions[name] = std::move(verts);
  }
  doc["regions"] = std::move(regions);
  return doc.dump(2) + "\n";
}

RegionBundle ImportRegionJson(std::string_view text) {
  RegionBundle b;
  try {
    const auto doc = nlohmann::json::parse(text);
    b.rates.rx = doc.at("rates").at("rx").get<double>();
    b.rates.ry = doc.at("rates").at("ry").get<double>();
    b.dist_digest = doc.at("dist_digest").get<std::string>();
    b.config_digest = doc.at("config_digest").get<std::string>();
    for (const char* name : kRegionNames) {
      std::vector<Point2> pts;
      for (const auto& v : doc.at("regions").at(name)) {
        pts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
      }
      RegionByName(b, name) = Region2D::Hull(std::move(pts));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return b;
}

std::map<std::string, Region2D> ImportRegionCsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "region,delta_x,delta_y") {
    throw Error(ErrorCode::kParseError, "missing region CSV header");
  }
  std::map<std::string, std::vector<Point2>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw Error(ErrorCode::kParseError, "malformed region CSV row: " + line);
    }
    try {
      rows[line.substr(0, c1)].push_back(
          {std::stod(line.substr(c1 + 1, c2 - c1 - 1)), std::stod(line.substr(c2 + 1))});
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "bad number in region CSV row: " + line);
    }
  }
  std::map<std::string, Region2D> out;
  for (auto& [name, pts] : rows) out[name] = Region2D::Hull(std::move(pts));
  return out;
}

}  // namespace infomask
