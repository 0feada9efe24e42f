#ifndef INFOMASK_CHANNEL_SEARCH_H_
#define INFOMASK_CHANNEL_SEARCH_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "infomask/info_measures.h"
#include "infomask/rng.h"

namespace infomask {

inline constexpr std::uint64_t kDefaultSizeCap = 10'000'000;

// Knobs shared by every auxiliary-channel search.
struct SearchConfig {
  int grid_resolution = 12;      // simplex grid entries are multiples of 1/K
  int random_samples = 20'000;
  int refine_steps = 200;
  double refine_step_size = 0.05;
  std::uint64_t seed = 0;
  int refine_starts = 32;        // best candidates handed to local_refine
  std::uint64_t size_cap = kDefaultSizeCap;

  // Defaults for the two-encoder (R_AA) cloud.
  static SearchConfig CloudDefaults();

  // Throws kInvalidArgument.
  void Validate() const;
};

// Objective value for a candidate channel. Lower is better.
struct Score {
  double value = 0.0;
  bool feasible = false;
};

using ChannelObjective = std::function<Score(const AuxChannel&)>;

// C(K+m-1, m-1), saturating at UINT64_MAX.
std::uint64_t SimplexGridCount(int m, int k);

// All pmfs on m symbols with entries in {0, 1/K, ..., 1}, lexicographic in the
// integer counts. Throws kSizeGuard when the count exceeds `cap`.
std::vector<Pmf> EnumerateSimplex(int m, int k, std::uint64_t cap = kDefaultSizeCap);

// Cartesian product of per-row simplex grids, first row varying slowest.
std::vector<AuxChannel> EnumerateChannels(int input_size, int output_size, int k,
                                          std::uint64_t cap = kDefaultSizeCap);

// Streaming form of EnumerateChannels; same order, no materialization.
void ForEachChannel(int input_size, int output_size, int k, std::uint64_t cap,
                    const std::function<void(const AuxChannel&)>& visit);

// Each row uniform on the simplex (normalized exponential spacings).
AuxChannel SampleChannel(int input_size, int output_size, Rng& rng);

// Euclidean projection onto the probability simplex, in place.
void ProjectToSimplex(std::span<double> v);

struct RefineResult {
  AuxChannel channel;
  Score score;
  std::vector<double> trace;  // accepted score after every step
};

// Greedy random single-row perturbation with simplex re-projection. A move
// is kept only if it stays feasible and strictly lowers the score.
// Throws kInfeasibleStart.
RefineResult LocalRefine(const ChannelObjective& objective, const AuxChannel& start,
                         int steps, double step_size, Rng& rng);

}  // namespace infomask

#endif  // INFOMASK_CHANNEL_SEARCH_H_
