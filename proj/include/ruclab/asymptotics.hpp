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
// Closed-form limiting predictions: the spectrum of the overlap matrix
// H_Sigma, the fixed-k limit law and its moments, compound free Poisson
// moments through non-crossing partitions, linear-regime moment /
// top-eigenvalue / entropy predictions, and the random-channel vs
// random-unitary-channel comparison.

#ifndef RUCLAB_ASYMPTOTICS_HPP_
#define RUCLAB_ASYMPTOTICS_HPP_

#include <json.hpp>

#include <optional>
#include <utility>
#include <vector>

#include "ruclab/linalg.hpp"
#include "ruclab/sampler.hpp"

namespace ruclab::asymptotics {

using sampler::WeightVector;

// k x k symmetric matrix with (x+y) w_i^2 on the diagonal and y w_i w_j off
// it; its ordered spectrum carries the nontrivial limiting output eigenvalues
RMat h_sigma(double x, double y, const WeightVector& w);

// descending spectrum of h_sigma(x, y, w)
RVec s_function(double x, double y, const WeightVector& w);

// limiting eigenvalues of the fixed-k product-channel output: the multiset
// {w_i w_j : i != j} together with S(1-m^2, m^2; w), sorted descending;
// sums to 1
RVec fixed_k_spectrum(const WeightVector& w, double m);

// sum_{i != j} (w_i w_j)^p + sum_i s_i^p with s = S(1-m^2, m^2; w)
double fixed_k_limit_moment(int p, const WeightVector& w, double m);

// law with free cumulants kappa_p = rate * jump_moments[p-1]
struct CompoundPoissonParams {
  double rate = 0.0;
  std::vector<double> jump_moments;  // index q holds m_{q+1} of the jump law
};

// p-th moment via the moment-cumulant formula: sum over non-crossing
// partitions of prod_b rate * m_{|b|}
double compound_poisson_moment(int p, const CompoundPoissonParams& params);

struct LinearPredictions {
  double c = 0.0;
  double m = 0.0;
  int n = 0;
  std::vector<double> t;                        // weight moment profile, t[0] = t_1 = 1
  std::vector<double> rescaled_trace_moments;   // E trace[(cn Z)^p], p = 1..p_max
  double top_eigenvalue = 0.0;                  // limit of cn * lambda_1
  CompoundPoissonParams compressed_law;         // rate c^2, jumps t_p^2
  std::vector<double> compressed_moments;       // moments of the (cn)^2-scaled compressed spectrum
  std::optional<double> entropy;                // closed form, uniform-weight profile only

  nlohmann::json to_json() const;
};

// Predictions for the linear-growth regime k/n -> c at Bell overlap m, given
// the weight moment profile t (t[0] = t_1 = 1, needed up to p_max):
//   - E trace[(cnZ)^p]: cn for p=1, t_2^2 + c^2 + t_2^2 m^4 for p=2,
//     t_2^p m^{2p} for p >= 3;
//   - cn lambda_1 -> t_2 m^2;
//   - compressed spectrum -> compound free Poisson, rate c^2, jumps t_p^2;
//   - entropy at dimension n for the uniform profile (t_p = 1):
//     2 log n - 1/(2c^2) when c >= 1, 2 log(cn) - c^2/2 when c < 1.
LinearPredictions linear_regime_predictions(int p_max, double c, const std::vector<double>& t,
                                            double m, int n);

nlohmann::json fixed_k_prediction_json(const WeightVector& w, double m);

// limiting output spectra at equal output dimension k^2: generic random
// channels vs random unitary channels (uniform weights), both sorted
// descending; the lists agree iff m = 0
std::pair<std::vector<double>, std::vector<double>> rc_vs_ruc(int k, double m);

}  // namespace ruclab::asymptotics

#endif  // RUCLAB_ASYMPTOTICS_HPP_
