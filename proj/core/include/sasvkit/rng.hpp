// sasvkit/rng.hpp

// Copyright 2026 sasvkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SASVKIT_RNG_HPP_
#define SASVKIT_RNG_HPP_

#include <cmath>
#include <cstdint>

namespace sasvkit {

// Fixed, documented random stream so that runs are reproducible bit for bit
// and the generator can be re-implemented in any language:
//
//   - state init: splitmix64 applied four times to the 64-bit seed
//     (Steele, Lea, Flood 2014),
//   - stream: xoshiro256** (Blackman, Vigna 2018),
//   - uniform in [0,1): (next() >> 11) * 2^-53,
//   - uniform in (0,1]: ((next() >> 11) + 1) * 2^-53,
//   - standard normal pair: Box-Muller,
//       u1 in (0,1], u2 in [0,1),
//       r = sqrt(-2 ln u1), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2).

inline std::uint64_t splitmix64_next(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto &word : state_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as the log argument in Box-Muller.
  double uniform_open01() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  // One Box-Muller pair; consumes exactly two stream values.
  void normal_pair(double &z0, double &z1) {
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * kPi * u2;
    z0 = r * std::cos(theta);
    z1 = r * std::sin(theta);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4] = {};
};

}  // namespace sasvkit

#endif  // SASVKIT_RNG_HPP_
