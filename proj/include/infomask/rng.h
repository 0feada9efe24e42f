#ifndef INFOMASK_RNG_H_
#define INFOMASK_RNG_H_

#include <cstdint>
#include <random>

namespace infomask {

// Seeded 64-bit generator. All draws use explicit transforms of the raw
// engine output so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix(seed)) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Uniform in (0, 1].
  double UniformPositive() { return 1.0 - Uniform(); }
  // Uniform integer in [0, bound), bound >= 1. Unbiased (rejection).
  std::uint64_t Below(std::uint64_t bound);
  double Exponential();

  // Child generator with an independent stream; advances this one.
  Rng Fork() { return Rng(Next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  static std::uint64_t Mix(std::uint64_t z);
  std::mt19937_64 engine_;
};

}  // namespace infomask

#endif  // INFOMASK_RNG_H_
