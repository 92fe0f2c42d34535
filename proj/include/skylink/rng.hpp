// Copyright (c) 2026 Skylink Contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SKYLINK_RNG_HPP
#define SKYLINK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

namespace skylink::rng {

// Every random draw in the simulator comes from a stream keyed by
// (seed, purpose, drop, entity indices). Results are therefore identical
// no matter how the work is split across threads.
enum class Purpose : std::uint64_t {
  UeDrop = 1,
  LosDraw = 2,
  Shadowing = 3,
  Fading = 4,
  Scheduling = 5,
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t seed, Purpose purpose,
                             std::uint64_t a = 0, std::uint64_t b = 0,
                             std::uint64_t c = 0) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= static_cast<std::uint64_t>(purpose) * 0x9e3779b97f4a7c15ULL;
  h ^= splitmix64(s);
  s ^= a + 0xd1b54a32d192ed03ULL;
  h ^= splitmix64(s);
  s ^= b + 0x8cb92ba72f3d8dd7ULL;
  h ^= splitmix64(s);
  s ^= c + 0xaef17502108ef2d9ULL;
  h ^= splitmix64(s);
  return h;
}

// xoshiro256++ (Blackman & Vigna, public domain). Chosen over the
// <random> engines because per-link substreams need cheap construction
// and std::normal_distribution output is implementation-defined, which
// would tie byte-exact result files to a particular standard library.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
  }

  Stream(std::uint64_t seed, Purpose purpose, std::uint64_t a = 0,
         std::uint64_t b = 0, std::uint64_t c = 0)
      : Stream(mix_key(seed, purpose, a, b, c)) {}

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

// Marsaglia polar method; avoids trig in the fading hot path.
inline std::pair<double, double> normal_pair(Stream& g) {
  while (true) {
    const double x = 2.0 * g.uniform() - 1.0;
    const double y = 2.0 * g.uniform() - 1.0;
    const double r2 = x * x + y * y;
    if (r2 < 1.0 && r2 > 0.0) {
      const double f = std::sqrt(-2.0 * std::log(r2) / r2);
      return {x * f, y * f};
    }
  }
}

inline double normal(Stream& g) { return normal_pair(g).first; }

}  // namespace skylink::rng

#endif  // SKYLINK_RNG_HPP
