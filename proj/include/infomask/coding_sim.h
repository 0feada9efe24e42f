#ifndef INFOMASK_CODING_SIM_H_
#define INFOMASK_CODING_SIM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infomask/info_measures.h"
#include "infomask/multiletter.h"

// Finite-blocklength random binning + vector quantization scheme for the
// amplification-masking problem, evaluated exactly by enumeration.

namespace infomask {

inline constexpr int kMaxCodebookExponent = 24;

// Robust typicality: |freq(a) - p(a)| <= eps * p(a) for every symbol a.
bool IsTypical(std::span<const int> seq, const Pmf& p, double eps);

// Robust typicality of the pair-empirical law against a two-axis joint;
// seq_a indexes the first axis. Throws kLengthMismatch.
bool JointlyTypical(std::span<const int> seq_a, std::span<const int> seq_b,
                    const JointPmf& joint, double eps);

struct Codebook {
  int n = 1;
  double eps = 0.05;
  double target_delta_a = 0.0;
  std::uint64_t seed = 0;
  int x_alphabet = 1;
  int u_alphabet = 1;

  Pmf px = Pmf({1.0});
  JointPmf yu = JointPmf({"Y", "U"}, {1, 1}, {1.0});  // p(y, u) for covering
  AuxChannel channel = AuxChannel::Constant(1, 1);

  int num_bins = 1;
  // Bin of every x-sequence by lexicographic index; -1 for atypical ones.
  std::vector<int> bin_of;
  int num_codewords = 1;
  // num_codewords * n symbols, codeword l at [l*n, (l+1)*n).
  std::vector<int> vq_codewords;

  std::span<const int> codeword(int l) const {
    return std::span<const int>(vq_codewords)
        .subspan(static_cast<std::size_t>(l) * static_cast<std::size_t>(n),
                 static_cast<std::size_t>(n));
  }
};

// ceil(2^{n(delta_a - I(X;U) + eps)}) bins and 2^{ceil(n(I(Y;U) + eps))}
// codewords, exponents clamped at zero. Throws kOutOfRange, kSizeGuard.
Codebook BuildCodebook(const JointPmf& j, const AuxChannel& ch, double delta_a,
                       double eps, int n, std::uint64_t seed);

// Same scheme with explicit bin and codeword counts.
Codebook BuildCodebookWithSizes(const JointPmf& j, const AuxChannel& ch, int num_bins,
                                int num_codewords, double eps, int n,
                                std::uint64_t seed, double target_delta_a = 0.0);

// Bin index, or nullopt when the sequence is atypical.
std::optional<int> EncodeX(const Codebook& cb, std::span<const int> xseq);
// Lowest codeword index jointly typical with yseq, or nullopt (no cover).
std::optional<int> EncodeY(const Codebook& cb, std::span<const int> yseq);

struct SimReport {
  double delta_a_measured = 0.0;   // (1/n) I(X^n; Fx, Fy)
  double delta_m_measured = 0.0;   // (1/n) I(Y^n; Fx, Fy)
  double residual_entropy = 0.0;   // (1/n) H(X^n | Fx, Fy)
  double encoder_failure_prob = 0.0;
  int n = 1;
  double target_delta_a = 0.0;
  double target_delta_m = 0.0;     // single-letter masking bound at the target
  double h_x = 0.0;
};

// Exact evaluation of one realized codebook. Encoder failures are mapped to
// a dedicated error message on each side so both encoders stay total.
SimReport EvaluateExact(const Codebook& cb, const JointPmf& j,
                        std::uint64_t cap = kEnumerationCap);

// residual_entropy - (H(X) - target_delta_a)
double EquivocationSlack(const SimReport& report, const JointPmf& j);

// theta * a + (1 - theta) * b on every information field. Throws kOutOfRange.
SimReport TimeshareEvaluate(const SimReport& a, const SimReport& b, double theta);

// The encoders of `cb` as total tables, failures on message num_bins
// (resp. num_codewords).
EncoderTable InducedXTable(const Codebook& cb);
EncoderTable InducedYTable(const Codebook& cb);

}  // namespace infomask

#endif  // INFOMASK_CODING_SIM_H_
