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

#include "ruclab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ruclab/permkit.hpp"
#include "ruclab/stats.hpp"

namespace ruclab::asymptotics {

RMat h_sigma(double x, double y, const WeightVector& w) {
  const int k = w.k();
  RMat h(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      h(i, j) = (i == j) ? (x + y) * w[i] * w[i] : y * w[i] * w[j];
    }
  }
  return h;
}

RVec s_function(double x, double y, const WeightVector& w) {
  return linalg::eigenvalues_descending(h_sigma(x, y, w));
}

RVec fixed_k_spectrum(const WeightVector& w, double m) {
  if (m < 0.0 || m > 1.0) throw std::invalid_argument("fixed_k_spectrum: overlap must lie in [0,1]");
  const int k = w.k();
  const RVec s = s_function(1.0 - m * m, m * m, w);
  std::vector<double> values;
  values.reserve(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) values.push_back(w[i] * w[j]);
    }
  }
  for (int i = 0; i < k; ++i) values.push_back(s(i));
  std::sort(values.begin(), values.end(), std::greater<double>());
  return Eigen::Map<const RVec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

double fixed_k_limit_moment(int p, const WeightVector& w, double m) {
  if (p < 1) throw std::invalid_argument("fixed_k_limit_moment: p must be positive");
  const RVec s = s_function(1.0 - m * m, m * m, w);
  const double off_diagonal = std::pow(w.trace_power(p), 2) - w.trace_power(2 * p);
  double s_power_sum = 0.0;
  for (int i = 0; i < s.size(); ++i) s_power_sum += std::pow(s(i), p);
  return off_diagonal + s_power_sum;
}

double compound_poisson_moment(int p, const CompoundPoissonParams& params) {
  if (p < 1) throw std::invalid_argument("compound_poisson_moment: p must be positive");
  if (static_cast<int>(params.jump_moments.size()) < p)
    throw std::invalid_argument("compound_poisson_moment: insufficient jump moments for p = " +
                                std::to_string(p));
  double total = 0.0;
  for (const auto& partition : permkit::noncrossing_partitions(p)) {
    double term = 1.0;
    for (const auto& block : partition.blocks()) {
      term *= params.rate * params.jump_moments[block.size() - 1];
    }
    total += term;
  }
  return total;
}

LinearPredictions linear_regime_predictions(int p_max, double c, const std::vector<double>& t,
                                            double m, int n) {
  if (p_max < 1) throw std::invalid_argument("linear_regime_predictions: p_max must be positive");
  if (c <= 0.0) throw std::invalid_argument("linear_regime_predictions: c must be positive");
  if (m < 0.0 || m > 1.0)
    throw std::invalid_argument("linear_regime_predictions: overlap must lie in [0,1]");
  if (t.empty() || std::abs(t[0] - 1.0) > 1e-12)
    throw std::invalid_argument("linear_regime_predictions: profile must start with t_1 = 1");
  if (static_cast<int>(t.size()) < std::max(2, p_max))
    throw std::invalid_argument("linear_regime_predictions: profile too short for p_max");

  LinearPredictions out;
  out.c = c;
  out.m = m;
  out.n = n;
  out.t = t;

  const double t2 = t[1];
  out.rescaled_trace_moments.resize(p_max);
  for (int p = 1; p <= p_max; ++p) {
    double value;
    if (p == 1) {
      value = c * n;  // trace preservation, exact at finite n
    } else if (p == 2) {
      value = t2 * t2 + c * c + t2 * t2 * std::pow(m, 4);
    } else {
      value = std::pow(t2, p) * std::pow(m, 2 * p);
    }
    out.rescaled_trace_moments[p - 1] = value;
  }

  out.top_eigenvalue = t2 * m * m;

  out.compressed_law.rate = c * c;
  out.compressed_law.jump_moments.resize(p_max);
  for (int p = 1; p <= p_max; ++p) out.compressed_law.jump_moments[p - 1] = t[p - 1] * t[p - 1];
  out.compressed_moments.resize(p_max);
  for (int p = 1; p <= p_max; ++p)
    out.compressed_moments[p - 1] = compound_poisson_moment(p, out.compressed_law);

  bool uniform = true;
  for (double tp : t) uniform = uniform && std::abs(tp - 1.0) <= 1e-12;
  if (uniform) {
    out.entropy = (c >= 1.0) ? 2.0 * std::log(static_cast<double>(n)) - 1.0 / (2.0 * c * c)
                             : 2.0 * std::log(c * n) - c * c / 2.0;
  }
  return out;
}

nlohmann::json LinearPredictions::to_json() const {
  nlohmann::json j;
  j["regime"] = "linear";
  j["params"] = {{"c", c}, {"m", m}, {"n", n}, {"t", t}};
  nlohmann::json moments = nlohmann::json::object();
  for (std::size_t p = 1; p <= rescaled_trace_moments.size(); ++p)
    moments[std::to_string(p)] = rescaled_trace_moments[p - 1];
  j["moment_table"] = moments;
  j["top_eigenvalue"] = top_eigenvalue;
  j["compressed_law"] = {{"rate", compressed_law.rate},
                         {"jump_moments", compressed_law.jump_moments}};
  j["compressed_moments"] = compressed_moments;
  if (entropy) j["entropy"] = *entropy;
  return j;
}

nlohmann::json fixed_k_prediction_json(const WeightVector& w, double m) {
  const RVec spectrum = fixed_k_spectrum(w, m);
  std::vector<double> eigenvalues(spectrum.data(), spectrum.data() + spectrum.size());
  nlohmann::json j;
  j["regime"] = "fixed_k";
  j["params"] = {{"k", w.k()}, {"w", w.w()}, {"m", m}};
  j["eigenvalues"] = eigenvalues;
  j["entropy"] = stats::shannon_entropy(eigenvalues);
  return j;
}

std::pair<std::vector<double>, std::vector<double>> rc_vs_ruc(int k, double m) {
  if (k < 1) throw std::invalid_argument("rc_vs_ruc: k must be positive");
  if (m < 0.0 || m > 1.0) throw std::invalid_argument("rc_vs_ruc: overlap must lie in [0,1]");
  const double kd = static_cast<double>(k);
  const double m2 = m * m;

  std::vector<double> rc;
  rc.reserve(k * k);
  rc.push_back(m2 / kd + 1.0 / (kd * kd) - m2 / (kd * kd * kd));
  for (int i = 1; i < k * k; ++i) rc.push_back(1.0 / (kd * kd) - m2 / (kd * kd * kd));

  std::vector<double> ruc;
  ruc.reserve(k * k);
  ruc.push_back(m2 / kd + (1.0 - m2) / (kd * kd));
  for (int i = 1; i < k; ++i) ruc.push_back((1.0 - m2) / (kd * kd));
  for (int i = 0; i < k * k - k; ++i) ruc.push_back(1.0 / (kd * kd));

  std::sort(rc.begin(), rc.end(), std::greater<double>());
  std::sort(ruc.begin(), ruc.end(), std::greater<double>());
  return {std::move(rc), std::move(ruc)};
}

}  // namespace ruclab::asymptotics
