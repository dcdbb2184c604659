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

#include "ruclab/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ruclab::sampler {

namespace {
constexpr double kWeightSumTolerance = 1e-12;
constexpr double kUnitarityTolerance = 1e-10;
}  // namespace

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw std::invalid_argument("WeightVector: needs at least one weight");
  double sum = 0.0;
  for (double x : w_) {
    if (x < 0.0) throw std::invalid_argument("WeightVector: weights must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance)
    throw std::invalid_argument("WeightVector: weights must sum to 1 (got " + std::to_string(sum) + ")");
}

WeightVector WeightVector::uniform(int k) {
  if (k < 1) throw std::invalid_argument("WeightVector::uniform: k must be positive");
  return WeightVector(std::vector<double>(k, 1.0 / k));
}

double WeightVector::trace_power(int p) const {
  double s = 0.0;
  for (double x : w_) s += std::pow(x, p);
  return s;
}

double WeightVector::t_moment(int p) const {
  if (profile_) {
    if (p < 1 || p > static_cast<int>(profile_->size()))
      throw std::invalid_argument("WeightVector: profile has no t_" + std::to_string(p));
    return (*profile_)[p - 1];
  }
  const double k = static_cast<double>(this->k());
  return std::pow(k, p - 1) * trace_power(p);
}

void WeightVector::set_profile(std::vector<double> t) {
  if (t.empty() || std::abs(t[0] - 1.0) > kWeightSumTolerance)
    throw std::invalid_argument("WeightVector: moment profile must start with t_1 = 1");
  profile_ = std::move(t);
}

CMat haar_unitary(int n, rng::Stream& stream) {
  if (n < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  CMat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = stream.complex_gaussian();
  }
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(n, n);
  // rephase so the implicit R has positive diagonal; this is what makes the
  // distribution Haar rather than QR-biased
  const CVec diag = qr.matrixQR().diagonal();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(diag(j));
    if (mag == 0.0) throw std::runtime_error("haar_unitary: singular Ginibre draw");
    q.col(j) *= diag(j) / mag;
  }
  return q;
}

CMat haar_isometry_truncation(int n, int k, rng::Stream& stream) {
  const CMat u = haar_unitary(k * n, stream);
  return u.leftCols(n);
}

ChannelRealization ChannelRealization::sample(int n, const WeightVector& weights,
                                              std::uint64_t root_seed, std::uint64_t trial) {
  ChannelRealization out{n, weights, {}};
  out.unitaries.reserve(weights.k());
  for (int u = 0; u < weights.k(); ++u) {
    auto stream = rng::derive_stream(root_seed, {trial, static_cast<std::uint64_t>(u)});
    CMat block = haar_unitary(n, stream);
    const double err = (block.adjoint() * block - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (err > kUnitarityTolerance)
      throw std::runtime_error("ChannelRealization: sampled block violates unitarity, error " +
                               std::to_string(err));
    out.unitaries.push_back(std::move(block));
  }
  return out;
}

CMat block_stack(const ChannelRealization& realization) {
  const int n = realization.n;
  const int k = realization.k();
  CMat v(k * n, n);
  for (int i = 0; i < k; ++i) v.middleRows(i * n, n) = realization.unitaries[i];
  return v;
}

CMat weighted_block_isometry(const ChannelRealization& realization) {
  const int n = realization.n;
  const int k = realization.k();
  CMat v(k * n, n);
  for (int i = 0; i < k; ++i) {
    v.middleRows(i * n, n) = std::sqrt(realization.weights[i]) * realization.unitaries[i];
  }
  return v;
}

}  // namespace ruclab::sampler
