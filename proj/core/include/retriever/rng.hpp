#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace retriever {

// All randomness in the pipeline flows from one base seed. Component streams
// are derived as splitmix64(base ^ fnv1a(label) ^ index) so that every
// consumer (init, batching, dropout, pools, corpus synthesis) gets an
// independent, reproducible stream.
uint64_t derive_seed(uint64_t base, std::string_view label, uint64_t index = 0);

// mt19937_64 with hand-rolled distributions. The standard distribution
// classes are implementation-defined, so we avoid them to keep outputs
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Uniform integer in [0, n). Rejection sampling, unbiased.
  size_t uniform_index(size_t n);

  // Box-Muller without the cached spare, one fresh pair per call.
  double normal(double mean, double stddev);

  // Normal(0, stddev) resampled until |x| <= cutoff * stddev.
  double truncated_normal(double stddev, double cutoff = 2.0);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (size_t i = v.size() - 1; i > 0; --i) {
      const size_t j = uniform_index(i + 1);
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace retriever
