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
// Moment machinery for the product-channel output: the net and necklace
// evaluators attached to a removal (alpha, beta), the geodesic-sum limit
// moment, an exact finite-size moment oracle by entrywise monomial
// integration, Monte Carlo moment estimation, and the subset-sum side of the
// overlap-matrix trace identity.

#ifndef RUCLAB_MOMENT_ENGINE_HPP_
#define RUCLAB_MOMENT_ENGINE_HPP_

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ruclab/channel_lab.hpp"
#include "ruclab/permkit.hpp"
#include "ruclab/sampler.hpp"

namespace ruclab::moment_engine {

using channel_lab::InputState;
using channel_lab::Regime;
using permkit::Permutation;
using sampler::WeightVector;

inline constexpr int kMaxDiagrammaticOrder = 12;
inline constexpr int kMaxSubsetSumOrder = 16;

// Weight-net value of a removal: product over blocks b of the join of the
// orbit partitions of gamma^{-1} alpha and gamma^{-1} beta of trace[W^{|b|}].
// alpha, beta act on the doubled ground set of order 2p.
double f_w_net(const Permutation& alpha, const Permutation& beta, const WeightVector& w);

// Necklace value of a removal: product over cycles c of beta^{-1} delta of
// trace of the A-word along c, with plain A on top labels and A^* on bottom
// labels.
Complex f_a_necklace(const Permutation& beta, const CMat& a);

// Limit moment of the fixed-k output by the geodesic expansion:
// sum over pairs A <= B of f_W(alpha, beta) m^{2|B|} (-1)^{|B \ A|}.
double diagrammatic_limit_moment(int p, const WeightVector& w, double m);

// Exact E trace[Z^p] for the fixed-k complementary-product output, computed
// by expanding the trace into monomials in unitary entries and integrating
// each monomial. No asymptotic shortcut; caps p <= 2, n <= 3, k <= 2 keep
// the monomial count sane.
double exact_moment(int p, int n, const WeightVector& w, const InputState& input);

struct MomentEntry {
  double estimate = 0.0;
  double std_error = 0.0;
  bool exact = false;  // deterministic identity, zero-variance entry
};

struct MomentSeries {
  std::map<int, MomentEntry> moments;  // keyed by p
  std::string regime;                  // "fixed_k" | "linear"
  nlohmann::json metadata;             // parameters, trial count, seed
  std::map<int, double> predictions;   // optional reference values per p

  // columns: p, estimate, stderr, prediction, z_score (empty cells when no
  // prediction is attached)
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

struct McMomentConfig {
  Regime regime = Regime::kFixedK;
  int n = 0;
  WeightVector weights = WeightVector::uniform(1);
  double m = 1.0;  // Bell overlap of the built-in input family
  int p_max = 2;
  int trials = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  double c = 1.0;  // linear regime only: rescale factor in trace[(cnZ)^p]
};

// Sample means of trace[Z^p] (fixed-k) or trace[(cnZ)^p] (linear) with
// standard errors; deterministic in (seed, trial indexing) independently of
// the worker count.
MomentSeries mc_moment(const McMomentConfig& config);

// sum over nonempty subsets A of [p] of x^{p-|A|} y^{|A|} prod_i
// trace[W^{2(a_{i+1}-a_i)}] with the cyclic final gap p + a_1 - a_{|A|};
// equals sum_i s_i^p - x^p trace[W^{2p}] with s = S(x, y; w)
double technical_identity_lhs(int p, double x, double y, const WeightVector& w);

}  // namespace ruclab::moment_engine

#endif  // RUCLAB_MOMENT_ENGINE_HPP_
