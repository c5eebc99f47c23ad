#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace rgb2point {

// Counter-based generator: value i of stream (seed, stream) is a pure function
// of (seed, stream, i), so any draw can be replayed without storing state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() { return at(counter_++); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n), n > 0. Modulo bias is < 2^-53 for n below 2^11.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n)) % n;
  }

  std::uint64_t at(std::uint64_t counter) const {
    return mix(seed_ ^ rotl(stream_, 31), counter);
  }

  // Standard normal via Box-Muller (one value per call, pair not cached so the
  // draw count stays a pure function of the counter).
  double next_normal();

  std::uint64_t counter() const { return counter_; }
  void set_counter(std::uint64_t c) { counter_ = c; }

  // Fisher-Yates permutation of {0, ..., n-1}.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  // splitmix64 finalizer over the (seed, counter) pair.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + counter * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

inline double CounterRng::next_normal() {
  // Resample u1 away from 0 so log() stays finite.
  double u1 = next_double();
  double u2 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

inline std::vector<std::size_t> CounterRng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_index(i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

}  // namespace rgb2point
