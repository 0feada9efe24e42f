#include "infomask/coding_sim.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "infomask/region_single_letter.h"
#include "infomask/rng.h"

namespace infomask {
namespace {

constexpr double kFreqSlack = 1e-12;

bool CellTypical(int count, int n, double p, double eps) {
  if (p <= 0.0) return count == 0;
  const double freq = static_cast<double>(count) / n;
  return std::abs(freq - p) <= eps * p + kFreqSlack;
}

int SampleSymbol(const Pmf& p, Rng& rng) {
  const double u = rng.Uniform();
  double cumulative = 0.0;
  for (int a = 0; a < p.size(); ++a) {
    cumulative += p[a];
    if (u < cumulative) return a;
  }
  // Rounding left u above the last partial sum; take the last supported symbol.
  for (int a = p.size() - 1; a >= 0; --a) {
    if (p[a] > 0.0) return a;
  }
  return 0;
}

int CeilPow2(double exponent) {
  return static_cast<int>(std::ceil(std::exp2(exponent) - 1e-9));
}

}  // namespace

bool IsTypical(std::span<const int> seq, const Pmf& p, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  if (seq.empty()) return false;
  std::vector<int> counts(static_cast<std::size_t>(p.size()), 0);
  for (int s : seq) {
    if (s < 0 || s >= p.size()) throw Error(ErrorCode::kOutOfRange, "symbol out of range");
    ++counts[static_cast<std::size_t>(s)];
  }
  const int n = static_cast<int>(seq.size());
  for (int a = 0; a < p.size(); ++a) {
    if (!CellTypical(counts[static_cast<std::size_t>(a)], n, p[a], eps)) return false;
  }
  return true;
}

bool JointlyTypical(std::span<const int> seq_a, std::span<const int> seq_b,
                    const JointPmf& joint, double eps) {
  if (seq_a.size() != seq_b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "sequences differ in length");
  }
  if (joint.rank() != 2) throw Error(ErrorCode::kDimensionMismatch, "joint must have 2 axes");
  if (!(eps > 0.0)) throw Error(ErrorCode::kInvalidArgument, "eps must be positive");
  if (seq_a.empty()) return false;
  const int na = joint.sizes()[0];
  const int nb = joint.sizes()[1];
  std::vector<int> counts(static_cast<std::size_t>(na * nb), 0);
  for (std::size_t i = 0; i < seq_a.size(); ++i) {
    if (seq_a[i] < 0 || seq_a[i] >= na || seq_b[i] < 0 || seq_b[i] >= nb) {
      throw Error(ErrorCode::kOutOfRange, "symbol out of range");
    }
    ++counts[static_cast<std::size_t>(seq_a[i] * nb + seq_b[i])];
  }
  const int n = static_cast<int>(seq_a.size());
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (!CellTypical(counts[c], n, joint.probs()[c], eps)) return false;
  }
  return true;
}

Codebook BuildCodebook(const JointPmf& j, const AuxChannel& ch, double delta_a,
                       double eps, int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "blocklength must be >= 1");
  if (!(eps > 0.0)) throw Error(ErrorCode::kOutOfRange, "eps must be positive");
  const AmCoordinates c = ComputeAmCoordinates(j, ch);
  if (!(delta_a >= 0.0) || delta_a > c.h_x + kFeasibilityTolerance) {
    throw Error(ErrorCode::kOutOfRange, "target delta_a must lie in [0, H(X)]");
  }
  const double bin_exp = std::max(0.0, n * (delta_a - c.i_xu + eps));
  const double cw_exp = std::max(0.0, std::ceil(n * (c.i_yu + eps) - 1e-9));
  if (bin_exp > kMaxCodebookExponent || cw_exp > kMaxCodebookExponent) {
    throw Error(ErrorCode::kSizeGuard, "codebook exponent exceeds " +
                                           std::to_string(kMaxCodebookExponent));
  }
  return BuildCodebookWithSizes(j, ch, CeilPow2(bin_exp), 1 << static_cast<int>(cw_exp), eps,
                                n, seed, delta_a);
}

Codebook BuildCodebookWithSizes(const JointPmf& j, const AuxChannel& ch, int num_bins,
                                int num_codewords, double eps, int n,
                                std::uint64_t seed, double target_delta_a) {
  if (n < 1 || num_bins < 1 || num_codewords < 1 || !(eps > 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "invalid codebook parameters");
  }
  const int nx = j.size_of(kAxisX);
  const std::uint64_t x_sequences = SequenceCount(n, nx);
  if (x_sequences > kEnumerationCap ||
      static_cast<std::uint64_t>(num_codewords) * static_cast<std::uint64_t>(n) >
          kEnumerationCap) {
    throw Error(ErrorCode::kSizeGuard, "codebook too large to materialize");
  }
  Codebook cb;
  cb.n = n;
  cb.eps = eps;
  cb.target_delta_a = target_delta_a;
  cb.seed = seed;
  cb.x_alphabet = nx;
  cb.u_alphabet = ch.output_size();
  cb.px = MarginalPmf(j, kAxisX);
  cb.yu = Marginalize(AttachChannel(j, kAxisY, ch, kAxisU),
                      {std::string(kAxisY), std::string(kAxisU)});
  cb.channel = ch;
  cb.num_bins = num_bins;
  cb.num_codewords = num_codewords;

  Rng rng(seed);
  Rng bin_rng = rng.Fork();
  Rng codeword_rng = rng.Fork();
  cb.bin_of.assign(x_sequences, -1);
  for (std::uint64_t idx = 0; idx < x_sequences; ++idx) {
    if (IsTypical(SequenceFromIndex(idx, n, nx), cb.px, eps)) {
      cb.bin_of[idx] = static_cast<int>(bin_rng.Below(static_cast<std::uint64_t>(num_bins)));
    }
  }
  const Pmf pu = MarginalPmf(cb.yu, kAxisU);
  cb.vq_codewords.resize(static_cast<std::size_t>(num_codewords) * static_cast<std::size_t>(n));
  for (int& s : cb.vq_codewords) s = SampleSymbol(pu, codeword_rng);
  return cb;
}

std::optional<int> EncodeX(const Codebook& cb, std::span<const int> xseq) {
  if (static_cast<int>(xseq.size()) != cb.n) {
    throw Error(ErrorCode::kLengthMismatch, "x sequence length differs from n");
  }
  for (int s : xseq) {
    if (s < 0 || s >= cb.x_alphabet) throw Error(ErrorCode::kOutOfRange, "symbol out of range");
  }
  const int bin = cb.bin_of[IndexOfSequence(xseq, cb.x_alphabet)];
  if (bin < 0) return std::nullopt;
  return bin;
}

std::optional<int> EncodeY(const Codebook& cb, std::span<const int> yseq) {
  if (static_cast<int>(yseq.size()) != cb.n) {
    throw Error(ErrorCode::kLengthMismatch, "y sequence length differs from n");
  }
  // Joint typicality implies typicality of the y marginal.
  if (!IsTypical(yseq, MarginalPmf(cb.yu, kAxisY), cb.eps)) return std::nullopt;
  for (int l = 0; l < cb.num_codewords; ++l) {
    if (JointlyTypical(yseq, cb.codeword(l), cb.yu, cb.eps)) return l;
  }
  return std::nullopt;
}

EncoderTable InducedXTable(const Codebook& cb) {
  EncoderTable t;
  t.n = cb.n;
  t.input_alphabet = cb.x_alphabet;
  t.num_messages = cb.num_bins + 1;
  t.table.resize(cb.bin_of.size());
  for (std::size_t i = 0; i < cb.bin_of.size(); ++i) {
    t.table[i] = cb.bin_of[i] >= 0 ? cb.bin_of[i] : cb.num_bins;
  }
  return t;
}

EncoderTable InducedYTable(const Codebook& cb) {
  const int ny = cb.yu.sizes()[0];
  EncoderTable t;
  t.n = cb.n;
  t.input_alphabet = ny;
  t.num_messages = cb.num_codewords + 1;
  const std::uint64_t count = SequenceCount(cb.n, ny);
  t.table.resize(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    t.table[i] = EncodeY(cb, SequenceFromIndex(i, cb.n, ny)).value_or(cb.num_codewords);
  }
  return t;
}

SimReport EvaluateExact(const Codebook& cb, const JointPmf& j, std::uint64_t cap) {
  const JointPmf xy = PermuteAxes(j, {std::string(kAxisX), std::string(kAxisY)});
  const int nx = xy.sizes()[0];
  const int ny = xy.sizes()[1];
  const int n = cb.n;
  if (nx != cb.x_alphabet || ny != cb.yu.sizes()[0]) {
    throw Error(ErrorCode::kDimensionMismatch, "codebook does not match the source");
  }
  const std::uint64_t sx = SequenceCount(n, nx);
  const std::uint64_t sy = SequenceCount(n, ny);
  const std::uint64_t pairs = SequenceCount(n, nx * ny);
  const auto mx = static_cast<std::uint64_t>(cb.num_bins) + 1;
  const auto my = static_cast<std::uint64_t>(cb.num_codewords) + 1;
  if (pairs > cap || sx * my > cap || sy * mx > cap || mx * my > cap) {
    throw Error(ErrorCode::kSizeGuard, "exact evaluation exceeds the enumeration cap");
  }

  // Encoder outputs with the error message appended at the end.
  std::vector<int> fx(sx), fy(sy);
  for (std::uint64_t i = 0; i < sx; ++i) fx[i] = cb.bin_of[i] >= 0 ? cb.bin_of[i] : cb.num_bins;
  for (std::uint64_t i = 0; i < sy; ++i) {
    fy[i] = EncodeY(cb, SequenceFromIndex(i, n, ny)).value_or(cb.num_codewords);
  }

  // P(X^n, L), P(Y^n, B) and P(B, L), accumulated over every (x^n, y^n).
  std::vector<double> x_and_l(sx * my, 0.0), y_and_b(sy * mx, 0.0), b_and_l(mx * my, 0.0);
  double failure = 0.0;
  const auto probs = xy.probs();
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (std::uint64_t z = 0; z < pairs; ++z) {
    double p = 1.0;
    std::uint64_t xi = 0, yi = 0;
    for (int pos = 0; pos < n; ++pos) {
      const int d = digit[static_cast<std::size_t>(pos)];
      p *= probs[static_cast<std::size_t>(d)];
      xi = xi * static_cast<std::uint64_t>(nx) + static_cast<std::uint64_t>(d / ny);
      yi = yi * static_cast<std::uint64_t>(ny) + static_cast<std::uint64_t>(d % ny);
    }
    for (int pos = n - 1; pos >= 0; --pos) {
      if (++digit[static_cast<std::size_t>(pos)] < nx * ny) break;
      digit[static_cast<std::size_t>(pos)] = 0;
    }
    if (p == 0.0) continue;
    const auto b = static_cast<std::uint64_t>(fx[xi]);
    const auto l = static_cast<std::uint64_t>(fy[yi]);
    x_and_l[xi * my + l] += p;
    y_and_b[yi * mx + b] += p;
    b_and_l[b * my + l] += p;
    if (b + 1 == mx || l + 1 == my) failure += p;
  }

  auto row_sums = [](const std::vector<double>& m, std::uint64_t rows, std::uint64_t cols) {
    std::vector<double> s(rows, 0.0);
    for (std::uint64_t r = 0; r < rows; ++r) {
      for (std::uint64_t c = 0; c < cols; ++c) s[r] += m[r * cols + c];
    }
    return s;
  };
  const double h_bl = EntropyOfWeights(b_and_l);
  const double h_xn = EntropyOfWeights(row_sums(x_and_l, sx, my));
  const double h_yn = EntropyOfWeights(row_sums(y_and_b, sy, mx));
  // B is a function of X^n and L of Y^n, so H(X^n|B,L) = H(X^n,L) - H(B,L).
  const double h_x_given_f = EntropyOfWeights(x_and_l) - h_bl;
  const double h_y_given_f = EntropyOfWeights(y_and_b) - h_bl;

  SimReport rep;
  rep.n = n;
  rep.residual_entropy = h_x_given_f / n;
  rep.delta_a_measured = (h_xn - h_x_given_f) / n;
  rep.delta_m_measured = (h_yn - h_y_given_f) / n;
  rep.encoder_failure_prob = std::min(failure, 1.0);
  rep.target_delta_a = cb.target_delta_a;
  const AmCoordinates c = ComputeAmCoordinates(xy, cb.channel);
  rep.target_delta_m = MaskingBound(c, cb.target_delta_a);
  rep.h_x = c.h_x;
  return rep;
}

double EquivocationSlack(const SimReport& report, const JointPmf& j) {
  const double h_x = JointEntropy(j, {std::string(kAxisX)});
  return report.residual_entropy - (h_x - report.target_delta_a);
}

SimReport TimeshareEvaluate(const SimReport& a, const SimReport& b, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "theta must lie in [0, 1]");
  }
  auto mix = [theta](double u, double v) { return theta * u + (1.0 - theta) * v; };
  SimReport r;
  r.delta_a_measured = mix(a.delta_a_measured, b.delta_a_measured);
  r.delta_m_measured = mix(a.delta_m_measured, b.delta_m_measured);
  r.residual_entropy = mix(a.residual_entropy, b.residual_entropy);
  r.encoder_failure_prob = mix(a.encoder_failure_prob, b.encoder_failure_prob);
  r.target_delta_a = mix(a.target_delta_a, b.target_delta_a);
  r.target_delta_m = mix(a.target_delta_m, b.target_delta_m);
  r.h_x = mix(a.h_x, b.h_x);
  r.n = theta >= 0.5 ? a.n : b.n;
  if (theta == 1.0) return a;
  if (theta == 0.0) return b;
  return r;
}

}  // namespace infomask
