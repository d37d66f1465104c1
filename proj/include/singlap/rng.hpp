#pragma once

#include <cstdint>

namespace singlap {

// Counter-based generator: the k-th variate depends only on (seed, k), so a
// sample stream is identical no matter how work is split across workers.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t counter) const {
    std::uint64_t z = seed_ + counter * 0x9E3779B97F4A7C15ULL;
    z = mix(z);
    z = mix(z ^ 0xD1B54A32D192ED03ULL);
    return z;
  }

  // uniform in [0,1)
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t seed_;
};

}  // namespace singlap
