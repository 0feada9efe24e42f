#include "infomask/io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace infomask {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

int RequireSize(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1) {
    throw Error(ErrorCode::kParseError, std::string("'") + key + "' must be a positive integer");
  }
  return doc[key].get<int>();
}

// rows x cols numeric matrix under `key`.
std::vector<std::vector<double>> RequireMatrix(const json& doc, const char* key, int rows,
                                               int cols) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(ErrorCode::kParseError, std::string("'") + key + "' must be an array");
  }
  const json& m = doc[key];
  if (m.size() != static_cast<std::size_t>(rows)) {
    throw Error(ErrorCode::kShapeMismatch, std::string("'") + key + "' has " +
                                               std::to_string(m.size()) + " rows, expected " +
                                               std::to_string(rows));
  }
  std::vector<std::vector<double>> out;
  for (const json& row : m) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
      throw Error(ErrorCode::kShapeMismatch, std::string("every row of '") + key +
                                                 "' must have " + std::to_string(cols) +
                                                 " entries");
    }
    std::vector<double> r;
    for (const json& v : row) {
      if (!v.is_number()) throw Error(ErrorCode::kParseError, "non-numeric matrix entry");
      const double x = v.get<double>();
      if (!std::isfinite(x)) throw Error(ErrorCode::kParseError, "non-finite matrix entry");
      if (x < 0.0) throw Error(ErrorCode::kNegativeEntry, "negative matrix entry");
      r.push_back(x);
    }
    out.push_back(std::move(r));
  }
  return out;
}

json MatrixJson(std::span<const double> flat, int rows, int cols) {
  json m = json::array();
  for (int i = 0; i < rows; ++i) {
    json r = json::array();
    for (int k = 0; k < cols; ++k) r.push_back(flat[static_cast<std::size_t>(i * cols + k)]);
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<std::string> Lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() != '#') out.push_back(line);
  }
  return out;
}

std::pair<double, double> ParsePair(const std::string& line) {
  const auto comma = line.find(',');
  if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
    throw Error(ErrorCode::kParseError, "expected two columns: " + line);
  }
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::kParseError, "bad number in row: " + line);
    }
    return v;
  };
  const std::string_view sv(line);
  return {number(sv.substr(0, comma)), number(sv.substr(comma + 1))};
}

std::vector<std::pair<double, double>> ParseTwoColumn(std::string_view text,
                                                      std::string_view header) {
  const auto lines = Lines(text);
  if (lines.empty() || lines.front() != header) {
    throw Error(ErrorCode::kParseError, "expected header '" + std::string(header) + "'");
  }
  std::vector<std::pair<double, double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(ParsePair(lines[i]));
  return rows;
}

const char* CurveHeader(bool mirrored) {
  return mirrored ? "delta_y,delta_x_min" : "delta_a,delta_m_min";
}

}  // namespace

std::string FormatNumber(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

JointPmf ParseDistribution(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "distribution must be an object");
  const int nx = RequireSize(doc, "x_size");
  const int ny = RequireSize(doc, "y_size");
  // File rows are X and columns Y, i.e. the transpose of a y-major table.
  const auto pmf = RequireMatrix(doc, "pmf", nx, ny);
  double total = 0.0;
  for (const auto& row : pmf) {
    for (double v : row) total += v;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kNormalizationError,
                "pmf sums to " + FormatNumber(total) + ", expected 1");
  }
  return JointPmf::FromMatrix(pmf);
}

std::string SerializeDistribution(const JointPmf& j) {
  const JointPmf xy = PermuteAxes(j, {std::string(kAxisX), std::string(kAxisY)});
  nlohmann::ordered_json doc;
  doc["x_size"] = xy.sizes()[0];
  doc["y_size"] = xy.sizes()[1];
  doc["pmf"] = MatrixJson(xy.probs(), xy.sizes()[0], xy.sizes()[1]);
  return doc.dump(2) + "\n";
}

AuxChannel ParseChannel(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "channel must be an object");
  const int in = RequireSize(doc, "input_size");
  const int out = RequireSize(doc, "output_size");
  std::vector<double> flat;
  for (const auto& row : RequireMatrix(doc, "rows", in, out)) {
    double total = 0.0;
    for (double v : row) total += v;
    if (std::abs(total - 1.0) > kMassTolerance) {
      throw Error(ErrorCode::kNormalizationError, "channel row does not sum to 1");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return AuxChannel(in, out, std::move(flat));
}

std::string SerializeChannel(const AuxChannel& ch) {
  nlohmann::ordered_json doc;
  doc["input_size"] = ch.input_size();
  doc["output_size"] = ch.output_size();
  doc["rows"] = MatrixJson(ch.data(), ch.input_size(), ch.output_size());
  return doc.dump(2) + "\n";
}

std::string CurveToCsv(const TradeoffCurve& curve, bool mirrored) {
  std::string out = std::string(CurveHeader(mirrored)) + "\n";
  for (const CurvePoint& p : curve.points) {
    out += FormatNumber(p.delta_a) + "," + FormatNumber(p.delta_m_min) + "\n";
  }
  return out;
}

std::vector<CurvePoint> CurveFromCsv(std::string_view text, bool mirrored) {
  std::vector<CurvePoint> out;
  for (const auto& [a, m] : ParseTwoColumn(text, CurveHeader(mirrored))) out.push_back({a, m});
  return out;
}

std::string PointsToCsv(const std::vector<MultiLetterPoint>& points) {
  std::string out = "ix,iy\n";
  for (const auto& p : points) out += FormatNumber(p.ix) + "," + FormatNumber(p.iy) + "\n";
  return out;
}

std::vector<MultiLetterPoint> PointsFromCsv(std::string_view text) {
  std::vector<MultiLetterPoint> out;
  for (const auto& [ix, iy] : ParseTwoColumn(text, "ix,iy")) {
    MultiLetterPoint p;
    p.ix = ix;
    p.iy = iy;
    out.push_back(p);
  }
  return out;
}

std::string ReportToJson(const SimReport& r) {
  nlohmann::ordered_json doc;
  doc["delta_a_measured"] = r.delta_a_measured;
  doc["delta_m_measured"] = r.delta_m_measured;
  doc["residual_entropy"] = r.residual_entropy;
  doc["encoder_failure_prob"] = r.encoder_failure_prob;
  doc["n"] = r.n;
  doc["target_delta_a"] = r.target_delta_a;
  doc["target_delta_m"] = r.target_delta_m;
  doc["h_x"] = r.h_x;
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileAtomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      std::remove(tmp.c_str());
      throw Error(ErrorCode::kInvalidArgument, "write to '" + path + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw Error(ErrorCode::kInvalidArgument, "cannot rename onto '" + path + "'");
  }
}

}  // namespace infomask
