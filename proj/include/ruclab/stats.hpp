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

#ifndef RUCLAB_STATS_HPP_
#define RUCLAB_STATS_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace ruclab::stats {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// unbiased sample variance
inline double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance: need at least 2 samples");
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return s / static_cast<double>(xs.size() - 1);
}

inline double standard_error(std::span<const double> xs) {
  return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

// Shannon entropy in nats; entries at or below the cutoff contribute nothing,
// so pure states come out exactly 0 and tiny negative eigenvalue noise is
// ignored.
inline double shannon_entropy(std::span<const double> probs, double cutoff = 1e-14) {
  double h = 0.0;
  for (double p : probs) {
    if (p > cutoff) h -= p * std::log(p);
  }
  return h;
}

inline double nats_to_bits(double nats) { return nats / std::log(2.0); }

}  // namespace ruclab::stats

#endif  // RUCLAB_STATS_HPP_
