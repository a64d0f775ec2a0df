#include "retriever/rng.hpp"

#include <cmath>
#include <numbers>

namespace retriever {

namespace {

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t splitmix64(uint64_t state) {
  uint64_t z = state + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t base, std::string_view label, uint64_t index) {
  return splitmix64(base ^ fnv1a64(label) ^ (0x9e3779b97f4a7c15ull * (index + 1)));
}

size_t Rng::uniform_index(size_t n) {
  if (n <= 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t r = gen_();
  while (r >= limit) r = gen_();
  return static_cast<size_t>(r % n);
}

double Rng::normal(double mean, double stddev) {
  // 1 - u keeps the log argument strictly positive.
  const double u = 1.0 - uniform01();
  const double v = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u));
  return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * v);
}

double Rng::truncated_normal(double stddev, double cutoff) {
  const double bound = cutoff * stddev;
  double x = normal(0.0, stddev);
  while (x < -bound || x > bound) {
    x = normal(0.0, stddev);
  }
  return x;
}

}  // namespace retriever
