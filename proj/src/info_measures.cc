#include "infomask/info_measures.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace infomask {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPmf: return "InvalidPmf";
    case ErrorCode::kUnknownAxis: return "UnknownAxis";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSizeGuard: return "SizeGuard";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInfeasibleStart: return "InfeasibleStart";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyRegion: return "EmptyRegion";
    case ErrorCode::kDegenerateLp: return "DegenerateLP";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNormalizationError: return "NormalizationError";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void ValidateWeights(std::span<const double> w, const char* what) {
  if (w.empty()) {
    throw Error(ErrorCode::kInvalidPmf, std::string(what) + " is empty");
  }
  double total = 0.0;
  for (double v : w) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidPmf,
                  std::string(what) + " has a negative or non-finite entry");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kInvalidPmf,
                std::string(what) + " sums to " + std::to_string(total));
  }
}

double PlogP(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

unsigned MaskOf(const JointPmf& j, const AxisSet& axes) {
  unsigned mask = 0;
  for (const auto& a : axes) mask |= 1u << j.axis_index(a);
  return mask;
}

// Entropy of the marginal on the axes selected by `mask`.
double SubsetEntropy(const JointPmf& j, unsigned mask) {
  if (mask == 0) return 0.0;
  const auto& sizes = j.sizes();
  const int rank = j.rank();
  const unsigned full = (1u << rank) - 1;
  auto probs = j.probs();
  if (mask == full) return EntropyOfWeights(probs);

  // Output stride for each input axis (0 if summed out).
  int out_stride[kMaxAxes] = {};
  std::size_t out_size = 1;
  for (int a = rank - 1; a >= 0; --a) {
    if (mask & (1u << a)) {
      out_stride[a] = static_cast<int>(out_size);
      out_size *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(a)]);
    }
  }
  std::vector<double> marginal(out_size, 0.0);
  int digit[kMaxAxes] = {};
  std::size_t out = 0;
  for (std::size_t flat = 0; flat < probs.size(); ++flat) {
    marginal[out] += probs[flat];
    // Odometer increment, last axis fastest.
    for (int a = rank - 1; a >= 0; --a) {
      ++digit[a];
      out += static_cast<std::size_t>(out_stride[a]);
      if (digit[a] < sizes[static_cast<std::size_t>(a)]) break;
      out -= static_cast<std::size_t>(out_stride[a]) *
             static_cast<std::size_t>(digit[a]);
      digit[a] = 0;
    }
  }
  return EntropyOfWeights(marginal);
}

}  // namespace

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  ValidateWeights(probs_, "pmf");
}

Pmf Pmf::Uniform(int size) {
  if (size < 1) throw Error(ErrorCode::kInvalidPmf, "uniform pmf size < 1");
  return Pmf(std::vector<double>(static_cast<std::size_t>(size), 1.0 / size));
}

AuxChannel::AuxChannel(int input_size, int output_size, std::vector<double> rows)
    : input_size_(input_size), output_size_(output_size), rows_(std::move(rows)) {
  if (input_size_ < 1 || output_size_ < 1) {
    throw Error(ErrorCode::kInvalidPmf, "channel sizes must be >= 1");
  }
  if (rows_.size() != static_cast<std::size_t>(input_size_ * output_size_)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "channel row data does not match input_size * output_size");
  }
  for (int i = 0; i < input_size_; ++i) ValidateWeights(row(i), "channel row");
}

AuxChannel AuxChannel::Identity(int size) {
  std::vector<double> rows(static_cast<std::size_t>(size * size), 0.0);
  for (int i = 0; i < size; ++i) rows[static_cast<std::size_t>(i * size + i)] = 1.0;
  return AuxChannel(size, size, std::move(rows));
}

AuxChannel AuxChannel::Constant(int input_size, int output_size) {
  std::vector<double> rows(static_cast<std::size_t>(input_size * output_size), 0.0);
  for (int i = 0; i < input_size; ++i) {
    rows[static_cast<std::size_t>(i * output_size)] = 1.0;
  }
  return AuxChannel(input_size, output_size, std::move(rows));
}

JointPmf::JointPmf(std::vector<std::string> axes, std::vector<int> sizes,
                   std::vector<double> probs)
    : axes_(std::move(axes)), sizes_(std::move(sizes)), probs_(std::move(probs)) {
  if (axes_.empty() || axes_.size() > static_cast<std::size_t>(kMaxAxes)) {
    throw Error(ErrorCode::kDimensionMismatch, "joint pmf needs 1..5 axes");
  }
  if (axes_.size() != sizes_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "axes and sizes differ in length");
  }
  std::set<std::string> seen(axes_.begin(), axes_.end());
  if (seen.size() != axes_.size()) {
    throw Error(ErrorCode::kOverlappingSets, "duplicate axis label");
  }
  std::size_t total = 1;
  for (int s : sizes_) {
    if (s < 1) throw Error(ErrorCode::kDimensionMismatch, "axis size < 1");
    total *= static_cast<std::size_t>(s);
  }
  if (total != probs_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "tensor size does not match axes");
  }
  ValidateWeights(probs_, "joint pmf");
}

JointPmf JointPmf::FromMatrix(const std::vector<std::vector<double>>& pxy) {
  if (pxy.empty() || pxy.front().empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  }
  const int nx = static_cast<int>(pxy.size());
  const int ny = static_cast<int>(pxy.front().size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(nx * ny));
  for (const auto& row : pxy) {
    if (static_cast<int>(row.size()) != ny) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return JointPmf({std::string(kAxisX), std::string(kAxisY)}, {nx, ny},
                  std::move(flat));
}

bool JointPmf::has_axis(std::string_view label) const {
  return std::find(axes_.begin(), axes_.end(), label) != axes_.end();
}

int JointPmf::axis_index(std::string_view label) const {
  auto it = std::find(axes_.begin(), axes_.end(), label);
  if (it == axes_.end()) {
    throw Error(ErrorCode::kUnknownAxis, "no axis named '" + std::string(label) + "'");
  }
  return static_cast<int>(it - axes_.begin());
}

double JointPmf::at(std::span<const int> index) const {
  if (index.size() != axes_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "index rank mismatch");
  }
  std::size_t flat = 0;
  for (std::size_t a = 0; a < index.size(); ++a) {
    if (index[a] < 0 || index[a] >= sizes_[a]) {
      throw Error(ErrorCode::kOutOfRange, "index out of range");
    }
    flat = flat * static_cast<std::size_t>(sizes_[a]) +
           static_cast<std::size_t>(index[a]);
  }
  return probs_[flat];
}

double Entropy(const Pmf& p) { return EntropyOfWeights(p.probs()); }

double EntropyOfWeights(std::span<const double> weights) {
  double h = 0.0;
  for (double p : weights) h += PlogP(p);
  return h;
}

double JointEntropy(const JointPmf& j, const AxisSet& axes) {
  return SubsetEntropy(j, MaskOf(j, axes));
}

JointPmf Marginalize(const JointPmf& j, const AxisSet& keep) {
  if (keep.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "marginalize needs a non-empty keep set");
  }
  const unsigned mask = MaskOf(j, keep);
  const int rank = j.rank();
  std::vector<std::string> axes;
  std::vector<int> sizes;
  int out_stride[kMaxAxes] = {};
  std::size_t out_size = 1;
  for (int a = rank - 1; a >= 0; --a) {
    if (mask & (1u << a)) {
      out_stride[a] = static_cast<int>(out_size);
      out_size *= static_cast<std::size_t>(j.sizes()[static_cast<std::size_t>(a)]);
    }
  }
  for (int a = 0; a < rank; ++a) {
    if (mask & (1u << a)) {
      axes.push_back(j.axes()[static_cast<std::size_t>(a)]);
      sizes.push_back(j.sizes()[static_cast<std::size_t>(a)]);
    }
  }
  std::vector<double> out(out_size, 0.0);
  auto probs = j.probs();
  int digit[kMaxAxes] = {};
  std::size_t o = 0;
  for (std::size_t flat = 0; flat < probs.size(); ++flat) {
    out[o] += probs[flat];
    for (int a = rank - 1; a >= 0; --a) {
      ++digit[a];
      o += static_cast<std::size_t>(out_stride[a]);
      if (digit[a] < j.sizes()[static_cast<std::size_t>(a)]) break;
      o -= static_cast<std::size_t>(out_stride[a]) * static_cast<std::size_t>(digit[a]);
      digit[a] = 0;
    }
  }
  return JointPmf(std::move(axes), std::move(sizes), std::move(out));
}

Pmf MarginalPmf(const JointPmf& j, std::string_view axis) {
  JointPmf m = Marginalize(j, {std::string(axis)});
  return Pmf(std::vector<double>(m.probs().begin(), m.probs().end()));
}

double MutualInformation(const JointPmf& j, const AxisSet& a, const AxisSet& b,
                         const AxisSet& given) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mutual information needs non-empty sets");
  }
  const unsigned ma = MaskOf(j, a);
  const unsigned mb = MaskOf(j, b);
  const unsigned mc = MaskOf(j, given);
  if ((ma & mb) || (ma & mc) || (mb & mc)) {
    throw Error(ErrorCode::kOverlappingSets, "argument axis sets overlap");
  }
  const double value = SubsetEntropy(j, ma | mc) + SubsetEntropy(j, mb | mc) -
                       SubsetEntropy(j, ma | mb | mc) - SubsetEntropy(j, mc);
  return std::max(value, 0.0);
}

JointPmf AttachChannel(const JointPmf& j, std::string_view source,
                       const AuxChannel& ch, std::string_view new_axis) {
  const int src = j.axis_index(source);
  if (ch.input_size() != j.sizes()[static_cast<std::size_t>(src)]) {
    throw Error(ErrorCode::kDimensionMismatch,
                "channel input size does not match axis '" + std::string(source) + "'");
  }
  if (j.has_axis(new_axis)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "axis '" + std::string(new_axis) + "' already present");
  }
  if (j.rank() >= kMaxAxes) {
    throw Error(ErrorCode::kDimensionMismatch, "too many axes");
  }
  std::size_t src_stride = 1;
  for (int a = j.rank() - 1; a > src; --a) {
    src_stride *= static_cast<std::size_t>(j.sizes()[static_cast<std::size_t>(a)]);
  }
  const auto src_size = static_cast<std::size_t>(ch.input_size());
  const auto out = static_cast<std::size_t>(ch.output_size());
  auto probs = j.probs();
  std::vector<double> q(probs.size() * out);
  for (std::size_t flat = 0; flat < probs.size(); ++flat) {
    const int s = static_cast<int>((flat / src_stride) % src_size);
    auto row = ch.row(s);
    for (std::size_t u = 0; u < out; ++u) q[flat * out + u] = probs[flat] * row[u];
  }
  // Products of normalized factors can drift from 1 by rounding only.
  double total = std::accumulate(q.begin(), q.end(), 0.0);
  for (double& v : q) v /= total;
  std::vector<std::string> axes = j.axes();
  axes.emplace_back(new_axis);
  std::vector<int> sizes = j.sizes();
  sizes.push_back(ch.output_size());
  return JointPmf(std::move(axes), std::move(sizes), std::move(q));
}

JointPmf PermuteAxes(const JointPmf& j, const AxisSet& order) {
  if (order.size() != j.axes().size()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation rank mismatch");
  }
  const int rank = j.rank();
  std::vector<int> src(static_cast<std::size_t>(rank));
  std::vector<int> sizes(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) {
    src[static_cast<std::size_t>(k)] = j.axis_index(order[static_cast<std::size_t>(k)]);
    sizes[static_cast<std::size_t>(k)] = j.sizes()[static_cast<std::size_t>(src[static_cast<std::size_t>(k)])];
  }
  std::set<int> distinct(src.begin(), src.end());
  if (static_cast<int>(distinct.size()) != rank) {
    throw Error(ErrorCode::kOverlappingSets, "permutation repeats an axis");
  }
  std::vector<std::size_t> in_stride(static_cast<std::size_t>(rank));
  std::size_t s = 1;
  for (int a = rank - 1; a >= 0; --a) {
    in_stride[static_cast<std::size_t>(a)] = s;
    s *= static_cast<std::size_t>(j.sizes()[static_cast<std::size_t>(a)]);
  }
  std::vector<double> out(j.probs().size());
  std::vector<int> digit(static_cast<std::size_t>(rank), 0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::size_t in = 0;
    for (int k = 0; k < rank; ++k) {
      in += static_cast<std::size_t>(digit[static_cast<std::size_t>(k)]) *
            in_stride[static_cast<std::size_t>(src[static_cast<std::size_t>(k)])];
    }
    out[flat] = j.probs()[in];
    for (int k = rank - 1; k >= 0; --k) {
      if (++digit[static_cast<std::size_t>(k)] < sizes[static_cast<std::size_t>(k)]) break;
      digit[static_cast<std::size_t>(k)] = 0;
    }
  }
  return JointPmf(order, std::move(sizes), std::move(out));
}

JointPmf SwapXY(const JointPmf& j) {
  if (j.rank() != 2 || !j.has_axis(kAxisX) || !j.has_axis(kAxisY)) {
    throw Error(ErrorCode::kDimensionMismatch, "SwapXY needs an {X, Y} joint");
  }
  JointPmf yx = PermuteAxes(j, {std::string(kAxisY), std::string(kAxisX)});
  std::vector<double> probs(yx.probs().begin(), yx.probs().end());
  return JointPmf({std::string(kAxisX), std::string(kAxisY)}, yx.sizes(),
                  std::move(probs));
}

}  // namespace infomask
