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
//
// Seeded sampling of Haar unitaries and of the block (stacked-unitary)
// isometries defining random unitary channels. Sampling is pure in
// (seed, trial, block), so Monte Carlo trials can run on independent workers
// and still reproduce bit-for-bit.

#ifndef RUCLAB_SAMPLER_HPP_
#define RUCLAB_SAMPLER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ruclab/linalg.hpp"
#include "ruclab/rng.hpp"

namespace ruclab::sampler {

// Channel weights w (nonnegative, summing to one), optionally carrying the
// rescaled moment profile t_p = lim (1/k) trace[(kW)^p] of the weight
// sequence they are drawn from.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w);
  static WeightVector uniform(int k);

  int k() const { return static_cast<int>(w_.size()); }
  const std::vector<double>& w() const { return w_; }
  double operator[](int i) const { return w_[i]; }

  // trace[W^p] = sum_i w_i^p
  double trace_power(int p) const;
  // finite-k moment profile (1/k) sum_i (k w_i)^p
  double t_moment(int p) const;

  // attach an explicit limiting profile (t_1 must be 1); index q holds t_{q+1}
  void set_profile(std::vector<double> t);
  const std::optional<std::vector<double>>& profile() const { return profile_; }

 private:
  std::vector<double> w_;
  std::optional<std::vector<double>> profile_;
};

// Haar-distributed unitary via complex Ginibre + QR, with the R diagonal
// rephased to positive reals (plain QR alone is not Haar).
CMat haar_unitary(int n, rng::Stream& stream);

// truncation of a Haar unitary on U(kn) to its first n columns
CMat haar_isometry_truncation(int n, int k, rng::Stream& stream);

// One Monte Carlo draw of the channel: k independent Haar unitaries plus the
// weight vector.
struct ChannelRealization {
  int n = 0;
  WeightVector weights;
  std::vector<CMat> unitaries;

  int k() const { return weights.k(); }

  // deterministic in (root_seed, trial); block u gets stream (trial, u)
  static ChannelRealization sample(int n, const WeightVector& weights, std::uint64_t root_seed,
                                   std::uint64_t trial);
};

// V = sum_i e_i (x) U_i, the unweighted stack; V^* V = k I_n
CMat block_stack(const ChannelRealization& realization);

// V~ = (diag(sqrt(w)) (x) I_n) V, the Stinespring isometry; V~^* V~ = I_n
CMat weighted_block_isometry(const ChannelRealization& realization);

}  // namespace ruclab::sampler

#endif  // RUCLAB_SAMPLER_HPP_
