#ifndef INFOMASK_IO_H_
#define INFOMASK_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "infomask/coding_sim.h"
#include "infomask/info_measures.h"
#include "infomask/multiletter.h"
#include "infomask/region_single_letter.h"

namespace infomask {

// {"x_size": nx, "y_size": ny, "pmf": [[...]]} with pmf[i][j] = P(X=i, Y=j).
// Throws kParseError, kNormalizationError, kNegativeEntry, kShapeMismatch.
JointPmf ParseDistribution(std::string_view text);
std::string SerializeDistribution(const JointPmf& j);

// {"input_size": a, "output_size": b, "rows": [[...]]}, rows[y][u] = p(u|y).
AuxChannel ParseChannel(std::string_view text);
std::string SerializeChannel(const AuxChannel& ch);

// `delta_a,delta_m_min`, or `delta_y,delta_x_min` when mirrored.
std::string CurveToCsv(const TradeoffCurve& curve, bool mirrored = false);
std::vector<CurvePoint> CurveFromCsv(std::string_view text, bool mirrored = false);

// `ix,iy`. Readers skip blank lines and lines starting with '#'.
std::string PointsToCsv(const std::vector<MultiLetterPoint>& points);
std::vector<MultiLetterPoint> PointsFromCsv(std::string_view text);

std::string ReportToJson(const SimReport& report);

std::string ReadFile(const std::string& path);
// Writes to a sibling temporary and renames over `path`.
void WriteFileAtomic(const std::string& path, std::string_view contents);

// Shortest round-trip decimal form.
std::string FormatNumber(double v);

}  // namespace infomask

#endif  // INFOMASK_IO_H_
