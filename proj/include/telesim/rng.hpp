// Copyright 2026 The telesim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TELESIM_RNG_HPP
#define TELESIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace telesim {

/// Counter-based pseudo-random stream (SplitMix64 core).
///
/// Every Monte Carlo shot owns an independent stream derived from
/// (master seed, shot index), so results are bit-reproducible no matter
/// how shots are scheduled across worker threads.
class ShotRng {
 public:
  explicit ShotRng(uint64_t seed) : state_(seed) {
    // Scramble once so that nearby seeds do not yield nearby streams.
    next_u64();
  }

  /// Stream for shot `index` under `master_seed`.
  static ShotRng for_shot(uint64_t master_seed, uint64_t index) {
    uint64_t s = master_seed ^ mix(index + 0x9e3779b97f4a7c15ull);
    return ShotRng(mix(s));
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + uniform() * (b - a); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard normal via Box-Muller (two uniforms per call, cosine branch).
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  double gaussian(double mean, double stddev) {
    return mean + stddev * gaussian();
  }

  /// Exponential with the given mean (mean <= 0 returns +infinity).
  double exponential(double mean) {
    if (!(mean > 0.0)) return std::numeric_limits<double>::infinity();
    double u = uniform();
    if (u >= 1.0) u = std::nextafter(1.0, 0.0);
    return -mean * std::log1p(-u);
  }

  /// Index in [0, n) drawn from the discrete distribution `weights`
  /// (non-negative, need not be normalized).
  template <typename Span>
  int discrete(const Span& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double x = uniform() * total;
    int n = static_cast<int>(weights.size());
    for (int i = 0; i < n; ++i) {
      x -= weights[i];
      if (x < 0.0) return i;
    }
    return n - 1;
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

}  // namespace telesim

#endif  // TELESIM_RNG_HPP
