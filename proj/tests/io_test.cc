#include "infomask/io.h"

#include <cstdio>
#include <filesystem>

#include "test_util.h"

namespace infomask {
namespace {

TEST(ParseDistributionTest, FileConvention) {
  const JointPmf j = ParseDistribution(
      R"({"x_size":2,"y_size":2,"pmf":[[0.3333333,0.1666667],[0.0,0.5]]})");
  EXPECT_EQ(j.axes(), (std::vector<std::string>{"X", "Y"}));
  const int x1y0[] = {1, 0};
  const int x0y1[] = {0, 1};
  EXPECT_EQ(j.at(x1y0), 0.0);
  EXPECT_NEAR(j.at(x0y1), 0.1666667, 1e-15);
  EXPECT_NEAR(JointEntropy(j, {"X"}), 1.0, 1e-6);
  EXPECT_NEAR(MutualInformation(j, {"X"}, {"Y"}), 0.459148, 1e-6);
}

TEST(ParseDistributionTest, Errors) {
  EXPECT_INFOMASK_ERROR(ParseDistribution(R"({"x_size":2,"y_size":2,"pmf":[[0.3,0.18],[0.0,0.5]]})"),
                        ErrorCode::kNormalizationError);
  EXPECT_INFOMASK_ERROR(ParseDistribution(R"({"x_size":2,"y_size":2,"pmf":[[0.6,-0.1],[0.0,0.5]]})"),
                        ErrorCode::kNegativeEntry);
  EXPECT_INFOMASK_ERROR(ParseDistribution(R"({"x_size":2,"y_size":2,"pmf":[[0.5,0.5]]})"),
                        ErrorCode::kShapeMismatch);
  EXPECT_INFOMASK_ERROR(ParseDistribution(R"({"x_size":2,"y_size":2,"pmf":[[0.5],[0.5]]})"),
                        ErrorCode::kShapeMismatch);
  EXPECT_INFOMASK_ERROR(ParseDistribution(R"({"x_size":2,"y_size":2,"pmf":[[0.5,"a"],[0,0.5]]})"),
                        ErrorCode::kParseError);
  EXPECT_INFOMASK_ERROR(ParseDistribution("{not json"), ErrorCode::kParseError);
  EXPECT_INFOMASK_ERROR(ParseDistribution(R"({"y_size":2,"pmf":[]})"), ErrorCode::kParseError);
}

TEST(ParseDistributionTest, RoundTrip) {
  const JointPmf j = testing::ReferenceJoint();
  const JointPmf back = ParseDistribution(SerializeDistribution(j));
  for (std::size_t i = 0; i < j.probs().size(); ++i) EXPECT_EQ(back.probs()[i], j.probs()[i]);
}

TEST(ParseChannelTest, RoundTripAndErrors) {
  const AuxChannel ch = testing::DefaultChannel();
  EXPECT_EQ(ParseChannel(SerializeChannel(ch)), ch);
  EXPECT_EQ(ParseChannel(ReadFile(testing::TestData("default_channel.json"))), ch);
  EXPECT_INFOMASK_ERROR(ParseChannel(R"({"input_size":1,"output_size":2,"rows":[[0.5,0.4]]})"),
                        ErrorCode::kNormalizationError);
  EXPECT_INFOMASK_ERROR(ParseChannel(R"({"input_size":2,"output_size":2,"rows":[[0.5,0.5]]})"),
                        ErrorCode::kShapeMismatch);
}

TEST(CsvTest, CurveRoundTrip) {
  TradeoffCurve c;
  c.points = {{0.0, 0.0}, {0.1, 1.0 / 3.0}, {0.2, 0.7071067811865476}};
  for (bool mirrored : {false, true}) {
    const std::string csv = CurveToCsv(c, mirrored);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), mirrored ? "delta_y,delta_x_min" : "delta_a,delta_m_min");
    const auto back = CurveFromCsv(csv, mirrored);
    ASSERT_EQ(back.size(), c.points.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      EXPECT_EQ(back[i].delta_a, c.points[i].delta_a);
      EXPECT_EQ(back[i].delta_m_min, c.points[i].delta_m_min);
    }
    EXPECT_INFOMASK_ERROR(CurveFromCsv(csv, !mirrored), ErrorCode::kParseError);
  }
}

TEST(CsvTest, PointsRoundTripSkipsComments) {
  MultiLetterPoint p;
  p.ix = 0.1234567890123;
  p.iy = 1e-17;
  const auto back = PointsFromCsv(PointsToCsv({p, p}) + "# verdict: contained\n");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].ix, p.ix);
  EXPECT_EQ(back[1].iy, p.iy);
  EXPECT_INFOMASK_ERROR(PointsFromCsv("ix,iy\n0.1;0.2\n"), ErrorCode::kParseError);
  EXPECT_INFOMASK_ERROR(PointsFromCsv("ix,iy\n0.1,0.2,0.3\n"), ErrorCode::kParseError);
}

TEST(ReportTest, JsonFields) {
  SimReport r;
  r.delta_a_measured = 0.25;
  r.n = 10;
  const std::string json = ReportToJson(r);
  EXPECT_NE(json.find("\"delta_a_measured\": 0.25"), std::string::npos);
  EXPECT_NE(json.find("\"n\": 10"), std::string::npos);
  EXPECT_NE(json.find("\"encoder_failure_prob\""), std::string::npos);
}

TEST(FileTest, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "infomask_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "out.csv").string();
  WriteFileAtomic(path, "a,b\n1,2\n");
  EXPECT_EQ(ReadFile(path), "a,b\n1,2\n");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  EXPECT_INFOMASK_ERROR(WriteFileAtomic((dir / "missing" / "x.csv").string(), "x"),
                        ErrorCode::kInvalidArgument);
  EXPECT_INFOMASK_ERROR(ReadFile((dir / "nope.json").string()), ErrorCode::kParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace infomask
