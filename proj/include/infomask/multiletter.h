#ifndef INFOMASK_MULTILETTER_H_
#define INFOMASK_MULTILETTER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "infomask/info_measures.h"

namespace infomask {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kFrontierPairCap = 1'000'000;

// Deterministic block encoder: every length-n sequence (lexicographic index,
// position 0 most significant) maps to a message in [0, num_messages).
struct EncoderTable {
  int n = 1;
  int input_alphabet = 1;
  int num_messages = 1;
  std::vector<int> table;

  static EncoderTable Identity(int n, int alphabet);
  static EncoderTable Constant(int n, int alphabet);

  double rate() const;
  // Throws kDimensionMismatch / kOutOfRange.
  void Validate() const;
};

// Number of sequences of length n over `alphabet` symbols; saturates.
std::uint64_t SequenceCount(int n, int alphabet);
// Symbols of the sequence with the given lexicographic index.
std::vector<int> SequenceFromIndex(std::uint64_t index, int n, int alphabet);
std::uint64_t IndexOfSequence(std::span<const int> seq, int alphabet);

struct MultiLetterPoint {
  double ix = 0.0;  // (1/n) I(X^n; Fx, Fy)
  double iy = 0.0;  // (1/n) I(Y^n; Fx, Fy)
  int n = 1;
  double rx = 0.0;
  double ry = 0.0;
};

// Exact normalized informations by full enumeration of sequence pairs.
// Throws kSizeGuard, kDimensionMismatch.
MultiLetterPoint EvaluatePair(const JointPmf& j, const EncoderTable& fx,
                              const EncoderTable& fy,
                              std::uint64_t cap = kEnumerationCap);

struct Frontier {
  std::vector<MultiLetterPoint> points;
  std::uint64_t pairs_evaluated = 0;
};

// Every deterministic encoder pair with mx, my messages at blocklength n.
// Points are de-duplicated within 1e-12. Throws kSizeGuard when the number
// of pairs exceeds `pair_cap`.
Frontier ExhaustiveFrontier(const JointPmf& j, int n, int mx, int my,
                            std::uint64_t pair_cap = kFrontierPairCap);

// `trials` uniformly random table pairs, deterministic given `seed`.
Frontier RandomFrontier(const JointPmf& j, int n, int mx, int my, int trials,
                        std::uint64_t seed);

// Merges message `from` into `into`; the inverse of splitting a message.
EncoderTable MergeMessages(const EncoderTable& f, int into, int from);

}  // namespace infomask

#endif  // INFOMASK_MULTILETTER_H_
