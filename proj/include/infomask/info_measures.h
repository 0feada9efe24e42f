#ifndef INFOMASK_INFO_MEASURES_H_
#define INFOMASK_INFO_MEASURES_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infomask/error.h"

// Exact entropies and mutual informations over small dense joint pmfs.
// Every quantity is in bits.

namespace infomask {

inline constexpr double kMassTolerance = 1e-9;
inline constexpr int kMaxAxes = 5;

// Canonical axis labels used across the library.
inline constexpr std::string_view kAxisX = "X";
inline constexpr std::string_view kAxisY = "Y";
inline constexpr std::string_view kAxisU = "U";
inline constexpr std::string_view kAxisUx = "Ux";
inline constexpr std::string_view kAxisUy = "Uy";

// A probability vector over {0, ..., size-1}.
class Pmf {
 public:
  // Throws kInvalidPmf on negative entries, empty input or bad normalization.
  explicit Pmf(std::vector<double> probs);

  static Pmf Uniform(int size);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Conditional pmf p(u | input). Row i is p(. | input = i).
class AuxChannel {
 public:
  // rows is row-major with input_size * output_size entries.
  AuxChannel(int input_size, int output_size, std::vector<double> rows);

  static AuxChannel Identity(int size);
  // Point mass on output symbol 0 for every input.
  static AuxChannel Constant(int input_size, int output_size);

  int input_size() const { return input_size_; }
  int output_size() const { return output_size_; }
  double operator()(int input, int output) const {
    return rows_[static_cast<std::size_t>(input * output_size_ + output)];
  }
  std::span<const double> row(int input) const {
    return std::span<const double>(rows_).subspan(
        static_cast<std::size_t>(input * output_size_),
        static_cast<std::size_t>(output_size_));
  }
  std::span<const double> data() const { return rows_; }

  friend bool operator==(const AuxChannel&, const AuxChannel&) = default;

 private:
  int input_size_;
  int output_size_;
  std::vector<double> rows_;
};

// Labeled dense probability tensor with 1..5 axes. Storage is row-major:
// the first axis varies slowest.
class JointPmf {
 public:
  JointPmf(std::vector<std::string> axes, std::vector<int> sizes,
           std::vector<double> probs);

  // Two-axis {X, Y} joint from a matrix with entry [x][y] = P(X=x, Y=y).
  static JointPmf FromMatrix(const std::vector<std::vector<double>>& pxy);

  int rank() const { return static_cast<int>(axes_.size()); }
  const std::vector<std::string>& axes() const { return axes_; }
  const std::vector<int>& sizes() const { return sizes_; }
  std::span<const double> probs() const { return probs_; }

  bool has_axis(std::string_view label) const;
  // Throws kUnknownAxis.
  int axis_index(std::string_view label) const;
  int size_of(std::string_view label) const {
    return sizes_[static_cast<std::size_t>(axis_index(label))];
  }

  double at(std::span<const int> index) const;

 private:
  std::vector<std::string> axes_;
  std::vector<int> sizes_;
  std::vector<double> probs_;
};

using AxisSet = std::vector<std::string>;

// -sum p log2 p with 0 log 0 = 0.
double Entropy(const Pmf& p);
// Same, for raw non-negative weights that are already normalized.
double EntropyOfWeights(std::span<const double> weights);

// Joint entropy of the listed axes.
double JointEntropy(const JointPmf& j, const AxisSet& axes);

// Sums out every axis not in `keep`. Output axes keep their original order.
JointPmf Marginalize(const JointPmf& j, const AxisSet& keep);

// Marginal of a single axis as a Pmf.
Pmf MarginalPmf(const JointPmf& j, std::string_view axis);

// I(A;B|C), clamped at zero. `given` may be empty.
double MutualInformation(const JointPmf& j, const AxisSet& a, const AxisSet& b,
                         const AxisSet& given = {});

// q(..., u) = j(...) * ch(u | source). The new axis is appended last.
JointPmf AttachChannel(const JointPmf& j, std::string_view source,
                       const AuxChannel& ch, std::string_view new_axis);

// Reorders axes; `order` must be a permutation of j.axes().
JointPmf PermuteAxes(const JointPmf& j, const AxisSet& order);

// The {X, Y} joint with the roles of X and Y exchanged.
JointPmf SwapXY(const JointPmf& j);

}  // namespace infomask

#endif  // INFOMASK_INFO_MEASURES_H_
