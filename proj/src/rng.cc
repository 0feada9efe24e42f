#include "infomask/rng.h"

#include <cmath>

namespace infomask {

std::uint64_t Rng::Mix(std::uint64_t z) {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = Next();
  } while (v >= limit);
  return v % bound;
}

double Rng::Exponential() { return -std::log(UniformPositive()); }

}  // namespace infomask
