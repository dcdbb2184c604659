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

#include "ruclab/moment_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ruclab/format.hpp"
#include "ruclab/parallel.hpp"
#include "ruclab/stats.hpp"
#include "ruclab/weingarten.hpp"

namespace ruclab::moment_engine {

namespace {

int doubled_order(const Permutation& alpha, const char* what) {
  const int size = alpha.size();
  if (size < 2 || size % 2 != 0)
    throw std::invalid_argument(std::string(what) + ": permutation must act on a doubled ground set");
  return size / 2;
}

}  // namespace

double f_w_net(const Permutation& alpha, const Permutation& beta, const WeightVector& w) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("f_w_net: size mismatch");
  const int p = doubled_order(alpha, "f_w_net");
  const auto wirings = permkit::canonical_wirings(p);
  const Permutation gamma_inv = wirings.gamma.inverse();
  const auto net = permkit::join(permkit::cycle_partition(gamma_inv * alpha),
                                 permkit::cycle_partition(gamma_inv * beta));
  double value = 1.0;
  for (const auto& block : net.blocks()) value *= w.trace_power(static_cast<int>(block.size()));
  return value;
}

Complex f_a_necklace(const Permutation& beta, const CMat& a) {
  const int p = doubled_order(beta, "f_a_necklace");
  linalg::require_square(a, "f_a_necklace");
  const auto wirings = permkit::canonical_wirings(p);
  const Permutation necklace = beta.inverse() * wirings.delta;
  Complex value = 1.0;
  for (const auto& cycle : necklace.cycles()) {
    CMat word = CMat::Identity(a.rows(), a.cols());
    for (int element : cycle) {
      if (element < p) {
        word *= a;  // top label
      } else {
        word *= a.adjoint();  // bottom label
      }
    }
    value *= word.trace();
  }
  return value;
}

double diagrammatic_limit_moment(int p, const WeightVector& w, double m) {
  if (p < 1 || p > kMaxDiagrammaticOrder)
    throw std::invalid_argument("diagrammatic_limit_moment: order must lie in [1, " +
                                std::to_string(kMaxDiagrammaticOrder) + "]");
  double total = 0.0;
  permkit::for_each_geodesic_pair(p, [&](const permkit::GeodesicPair& pair) {
    const int extra = pair.b_size() - pair.a_size();
    const double sign = (extra % 2 == 0) ? 1.0 : -1.0;
    total += f_w_net(pair.alpha, pair.beta, w) * std::pow(m, 2 * pair.b_size()) * sign;
  });
  return total;
}

namespace {

// The integral of a monomial depends only on the level labels and on the
// equality patterns between plain and conjugate row/column indices; within
// the exact_moment caps (2p <= 4 factors, k <= 2 levels) that signature
// packs into 40 bits.
std::uint64_t pattern_key(const std::vector<int>& rows, const std::vector<int>& cols,
                          const std::vector<int>& conj_rows, const std::vector<int>& conj_cols,
                          const std::vector<int>& lev, const std::vector<int>& conj_lev) {
  const std::size_t pp = rows.size();
  std::uint64_t key = 0;
  for (std::size_t t = 0; t < pp; ++t) key = (key << 1) | static_cast<std::uint64_t>(lev[t]);
  for (std::size_t t = 0; t < pp; ++t) key = (key << 1) | static_cast<std::uint64_t>(conj_lev[t]);
  for (std::size_t t = 0; t < pp; ++t) {
    for (std::size_t s = 0; s < pp; ++s) {
      key = (key << 1) | static_cast<std::uint64_t>(rows[t] == conj_rows[s]);
    }
  }
  for (std::size_t t = 0; t < pp; ++t) {
    for (std::size_t s = 0; s < pp; ++s) {
      key = (key << 1) | static_cast<std::uint64_t>(cols[t] == conj_cols[s]);
    }
  }
  return key;
}

}  // namespace

double exact_moment(int p, int n, const WeightVector& w, const InputState& input) {
  if (p < 1 || p > 2) throw std::invalid_argument("exact_moment: cap is p <= 2");
  if (n < 1 || n > 3) throw std::invalid_argument("exact_moment: cap is n <= 3");
  const int k = w.k();
  if (k > 2) throw std::invalid_argument("exact_moment: cap is k <= 2");
  if (input.n != n) throw std::invalid_argument("exact_moment: input dimension mismatch");

  const CMat& a = input.coefficients;
  weingarten::WgCache cache(n);
  std::unordered_map<std::uint64_t, double> memo;

  struct Entry {
    int row;
    int col;
    Complex value;
  };
  std::vector<Entry> support;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a(x, y) != Complex(0.0, 0.0)) support.push_back({x, y, a(x, y)});
    }
  }

  const int pp = 2 * p;
  std::vector<int> rows(pp), cols(pp), conj_rows(pp), conj_cols(pp), lev(pp), conj_lev(pp);
  std::vector<int> env_i(p), env_j(p);
  Complex total = 0.0;

  // factor layout per trace step s (with cyclic successor sn):
  //   plain slot s:   U^{(i_s)}(a_s, x_s)        plain slot p+s: U^{(j_sn)}(b_s, y'_s)
  //   conj  slot s:   U^{(j_s)}(b_s, y_s)        conj  slot p+s: U^{(i_sn)}(a_s, x'_s)
  // where A(x_s, y_s) multiplies the plain pair and conj(A(x'_s, y'_s)) the
  // conjugate pair; the environment indices contribute prod_s w_{i_s} w_{j_s}.
  std::vector<int> a_idx(p), b_idx(p);
  std::vector<const Entry*> plain_entry(p), conj_entry(p);

  std::function<void(int, Complex)> recurse = [&](int t, Complex coeff) {
    if (coeff == Complex(0.0, 0.0)) return;
    if (t == p) {
      for (int s = 0; s < p; ++s) {
        const int sn = (s + 1) % p;
        lev[s] = env_i[s];
        conj_lev[s] = env_j[s];
        lev[p + s] = env_j[sn];
        conj_lev[p + s] = env_i[sn];
        rows[s] = a_idx[s];
        cols[s] = plain_entry[s]->row;
        conj_rows[s] = b_idx[s];
        conj_cols[s] = plain_entry[s]->col;
        rows[p + s] = b_idx[s];
        cols[p + s] = conj_entry[s]->col;
        conj_rows[p + s] = a_idx[s];
        conj_cols[p + s] = conj_entry[s]->row;
      }
      const std::uint64_t key = pattern_key(rows, cols, conj_rows, conj_cols, lev, conj_lev);
      auto it = memo.find(key);
      if (it == memo.end()) {
        const double integral =
            weingarten::monomial_integral(cache, rows, cols, conj_rows, conj_cols, lev, conj_lev);
        it = memo.emplace(key, integral).first;
      }
      total += coeff * it->second;
      return;
    }
    for (int at = 0; at < n; ++at) {
      a_idx[t] = at;
      for (int bt = 0; bt < n; ++bt) {
        b_idx[t] = bt;
        for (const Entry& plain : support) {
          plain_entry[t] = &plain;
          for (const Entry& conj : support) {
            conj_entry[t] = &conj;
            recurse(t + 1, coeff * plain.value * std::conj(conj.value));
          }
        }
      }
    }
  };

  // environment (block) indices of the p trace steps
  std::function<void(int, double)> choose_blocks = [&](int t, double weight) {
    if (weight == 0.0) return;
    if (t == p) {
      recurse(0, Complex(weight, 0.0));
      return;
    }
    for (int i = 0; i < k; ++i) {
      env_i[t] = i;
      for (int j = 0; j < k; ++j) {
        env_j[t] = j;
        choose_blocks(t + 1, weight * w[i] * w[j]);
      }
    }
  };
  choose_blocks(0, 1.0);

  if (std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(total.real())))
    throw std::runtime_error("exact_moment: non-real moment, imaginary part " +
                             std::to_string(total.imag()));
  return total.real();
}

std::string MomentSeries::to_csv() const {
  std::string out = "p,estimate,stderr,prediction,z_score\n";
  for (const auto& [p, entry] : moments) {
    std::vector<std::string> cells = {std::to_string(p), format::number(entry.estimate),
                                      format::number(entry.std_error), "", ""};
    const auto pred = predictions.find(p);
    if (pred != predictions.end()) {
      cells[3] = format::number(pred->second);
      // z-scores are meaningless on deterministic entries whose stderr is
      // pure summation noise
      if (!entry.exact && entry.std_error > 0.0)
        cells[4] = format::number((entry.estimate - pred->second) / entry.std_error);
    }
    out += format::csv_row(cells);
  }
  return out;
}

nlohmann::json MomentSeries::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [p, entry] : moments) {
    nlohmann::json row = {{"p", p},
                          {"estimate", entry.estimate},
                          {"stderr", entry.std_error},
                          {"exact", entry.exact}};
    const auto pred = predictions.find(p);
    if (pred != predictions.end()) row["prediction"] = pred->second;
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"regime", regime}, {"metadata", metadata}, {"moments", rows}};
}

MomentSeries mc_moment(const McMomentConfig& config) {
  if (config.trials < 2) throw std::invalid_argument("mc_moment: need at least 2 trials");
  if (config.p_max < 1) throw std::invalid_argument("mc_moment: p_max must be positive");
  const bool linear = config.regime == Regime::kLinear;
  const InputState input = channel_lab::input_family(config.n, config.m);
  const double hw_bound = channel_lab::hayden_winter_bound(input, config.weights);
  const double rescale = linear ? config.c * config.n : 1.0;

  std::vector<std::vector<double>> powers(config.trials);
  parallel::for_each_trial(config.trials, config.jobs, [&](int trial) {
    const auto realization = sampler::ChannelRealization::sample(
        config.n, config.weights, config.seed, static_cast<std::uint64_t>(trial));
    RVec eigenvalues;
    if (linear) {
      eigenvalues = channel_lab::linear_trial_stats(realization, input).eigenvalues;
    } else {
      const auto z = channel_lab::product_output(realization, input, Regime::kFixedK);
      eigenvalues = linalg::eigenvalues_descending(z.matrix);
    }
    if (eigenvalues(0) < hw_bound - 1e-10)
      throw std::runtime_error("mc_moment: largest-eigenvalue lower bound violated");
    std::vector<double> row(config.p_max);
    for (int p = 1; p <= config.p_max; ++p) {
      double sum = 0.0;
      for (int i = 0; i < eigenvalues.size(); ++i) sum += std::pow(eigenvalues(i), p);
      row[p - 1] = std::pow(rescale, p) * sum;
    }
    powers[trial] = std::move(row);
  });

  MomentSeries series;
  series.regime = linear ? "linear" : "fixed_k";
  series.metadata = {{"n", config.n},      {"k", config.weights.k()}, {"m", config.m},
                     {"trials", config.trials}, {"seed", config.seed}};
  if (linear) series.metadata["c"] = config.c;

  std::vector<double> column(config.trials);
  for (int p = 1; p <= config.p_max; ++p) {
    for (int t = 0; t < config.trials; ++t) column[t] = powers[t][p - 1];
    MomentEntry entry;
    entry.estimate = stats::mean(column);
    entry.std_error = stats::standard_error(column);
    entry.exact = (p == 1);
    series.moments[p] = entry;
  }

  // trace preservation makes p = 1 deterministic
  const double unit = series.moments[1].estimate / rescale;
  if (std::abs(unit - 1.0) > 1e-10)
    throw std::runtime_error("mc_moment: p = 1 moment deviates from trace normalization by " +
                             std::to_string(std::abs(unit - 1.0)));
  return series;
}

double technical_identity_lhs(int p, double x, double y, const WeightVector& w) {
  if (p < 1 || p > kMaxSubsetSumOrder)
    throw std::invalid_argument("technical_identity_lhs: order must lie in [1, " +
                                std::to_string(kMaxSubsetSumOrder) + "]");
  if (w.k() > 8) throw std::invalid_argument("technical_identity_lhs: cap is k <= 8");
  double total = 0.0;
  std::vector<int> members;
  for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
    members.clear();
    for (int i = 0; i < p; ++i) {
      if (mask & (1u << i)) members.push_back(i);
    }
    const int r = static_cast<int>(members.size());
    double term = std::pow(x, p - r) * std::pow(y, r);
    for (int i = 0; i < r; ++i) {
      const int gap = (i + 1 < r) ? members[i + 1] - members[i] : p + members[0] - members[r - 1];
      term *= w.trace_power(2 * gap);
    }
    total += term;
  }
  return total;
}

}  // namespace ruclab::moment_engine
