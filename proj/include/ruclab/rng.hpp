// Copyright 2026 The ruclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RUCLAB_RNG_HPP_
#define RUCLAB_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>

namespace ruclab::rng {

// splitmix64 step; also used to derive independent streams from (seed, path).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256++ with Box-Muller normals. Self-contained so that identical
// (seed, path) pairs reproduce identical draws on any platform/toolchain.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

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

  // uniform on (0,1]; never returns 0 so log() below is safe
  double uniform01() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // standard complex normal: E z = 0, E |z|^2 = 1
  std::complex<double> complex_gaussian() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const double re = gaussian();
    const double im = gaussian();
    return {re * inv_sqrt2, im * inv_sqrt2};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Derives a stream from a root seed and a path of indices (e.g. {trial,
// block}). Distinct paths yield independent streams; the derivation order is
// part of the reproducibility contract.
inline Stream derive_stream(std::uint64_t root_seed,
                            std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = root_seed;
  std::uint64_t acc = splitmix64(s);
  for (std::uint64_t id : path) {
    s = acc ^ (id + 0x9e3779b97f4a7c15ULL);
    acc = splitmix64(s);
  }
  return Stream(acc);
}

}  // namespace ruclab::rng

#endif  // RUCLAB_RNG_HPP_
