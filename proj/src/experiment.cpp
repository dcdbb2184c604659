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

#include "ruclab/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "ruclab/asymptotics.hpp"
#include "ruclab/channel_lab.hpp"
#include "ruclab/format.hpp"
#include "ruclab/moment_engine.hpp"
#include "ruclab/parallel.hpp"
#include "ruclab/rng.hpp"
#include "ruclab/stats.hpp"
#include "ruclab/weingarten.hpp"

namespace ruclab::experiment {

namespace {

using channel_lab::InputState;
using channel_lab::Regime;
using nlohmann::json;
using sampler::WeightVector;

constexpr double kHwTolerance = 1e-10;

const json& require_param(const json& params, const char* key) {
  if (!params.contains(key))
    throw UsageError(std::string("missing required parameter '") + key + "'");
  return params.at(key);
}

int require_int(const json& params, const char* key) {
  const json& v = require_param(params, key);
  if (!v.is_number_integer()) throw UsageError(std::string("parameter '") + key + "' must be an integer");
  return v.get<int>();
}

double require_double(const json& params, const char* key) {
  const json& v = require_param(params, key);
  if (!v.is_number()) throw UsageError(std::string("parameter '") + key + "' must be a number");
  return v.get<double>();
}

WeightVector parse_weights(const json& params, int k) {
  const json& spec = require_param(params, "weights");
  try {
    if (spec.is_string()) {
      if (spec.get<std::string>() == "uniform") return WeightVector::uniform(k);
      throw UsageError("weights: unknown specification '" + spec.get<std::string>() + "'");
    }
    if (spec.is_array()) {
      const auto values = spec.get<std::vector<double>>();
      if (static_cast<int>(values.size()) != k)
        throw UsageError("weights: expected " + std::to_string(k) + " entries, got " +
                         std::to_string(values.size()));
      return WeightVector(values);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("weights: ") + e.what());
  }
  throw UsageError("weights: must be \"uniform\" or an array");
}

GateResult upper_bound_gate(const std::string& name, double value, double threshold,
                            std::string detail = {}) {
  return GateResult{name, value <= threshold, value, threshold, std::move(detail)};
}

std::vector<double> random_simplex(rng::Stream& stream, int k) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(stream.uniform01());
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

std::string cycle_type_string(const std::vector<int>& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(type[i]);
  }
  return out;
}

permkit::Permutation class_representative(int p, const std::vector<int>& type) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int len : type) {
    std::vector<int> c(len);
    for (int i = 0; i < len; ++i) c[i] = next++;
    cycles.push_back(std::move(c));
  }
  return permkit::Permutation::from_cycles(p, cycles);
}

// ---------------------------------------------------------------------------
// wg-table

RunRecord run_wg_table(const Config& config) {
  const int n = require_int(config.params, "n");
  const int p = require_int(config.params, "p");
  if (p < 1 || p > weingarten::kMaxOrder)
    throw UsageError("wg-table: p must lie in [1, " + std::to_string(weingarten::kMaxOrder) + "]");
  if (n < p) throw UsageError("wg-table: exact table columns require n >= p");

  const weingarten::WeingartenTable table(n, p);

  std::string csv = "cycle_type,exact_num,exact_den,asymptotic,ratio\n";
  for (const auto& type : table.classes()) {
    const auto& exact = table.exact(type);
    const double asym = weingarten::wg_asymptotic(n, class_representative(p, type));
    csv += format::csv_row({cycle_type_string(type), exact.get_num().get_str(),
                            exact.get_den().get_str(), format::number(asym),
                            format::number(exact.get_d() / asym)});
  }

  // convolution identity, checked in exact arithmetic over all of S_p
  weingarten::Rational worst = 0;
  const auto group = permkit::all_permutations(p);
  for (const auto& type : table.classes()) {
    const auto sigma = class_representative(p, type);
    weingarten::Rational sum = 0;
    for (const auto& tau : group) {
      const int cycles = (sigma * tau.inverse()).cycle_count();
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(cycles));
      sum += weingarten::Rational(power) * table.exact(tau.cycle_type());
    }
    const weingarten::Rational target = (sigma.length() == 0) ? 1 : 0;
    weingarten::Rational dev = sum - target;
    if (dev < 0) dev = -dev;
    if (dev > worst) worst = dev;
  }

  RunRecord record;
  record.tables["wg_table"] = csv;
  record.aggregates = {{"n", n}, {"p", p}, {"classes", table.classes().size()}};
  record.gates.push_back(GateResult{"convolution_identity_exact", worst == 0, worst.get_d(), 0.0,
                                    "max |convolution residual| over class representatives"});
  return record;
}

// ---------------------------------------------------------------------------
// fixed-k-sim

RunRecord run_fixed_k(const Config& config) {
  const int n = require_int(config.params, "n");
  const int k = require_int(config.params, "k");
  const double m = require_double(config.params, "m");
  const int trials = require_int(config.params, "trials");
  if (trials < 1) throw UsageError("fixed-k-sim: trials must be positive");
  const WeightVector w = parse_weights(config.params, k);
  const InputState input = channel_lab::input_family(n, m);
  const double bound = channel_lab::hayden_winter_bound(input, w);
  const RVec predicted = asymptotics::fixed_k_spectrum(w, m);
  const int dim = k * k;

  std::vector<RVec> spectra(trials);
  parallel::for_each_trial(trials, config.jobs, [&](int trial) {
    const auto realization = sampler::ChannelRealization::sample(
        n, w, config.seed, static_cast<std::uint64_t>(trial));
    const auto z = channel_lab::product_output(realization, input, Regime::kFixedK);
    spectra[trial] = linalg::eigenvalues_descending(z.matrix);
  });

  RVec rank_mean = RVec::Zero(dim);
  double mad = 0.0;
  int hw_violations = 0;
  RunRecord record;
  std::vector<double> plot_samples;
  plot_samples.reserve(static_cast<std::size_t>(trials) * dim);
  for (int t = 0; t < trials; ++t) {
    for (int r = 0; r < dim; ++r) {
      rank_mean(r) += spectra[t](r);
      mad += std::abs(spectra[t](r) - predicted(r));
      plot_samples.push_back(spectra[t](r));
    }
    if (spectra[t](0) < bound - kHwTolerance) ++hw_violations;
    record.per_trial.push_back(
        {{"trial", t}, {"lambda_max", spectra[t](0)}, {"hw_margin", spectra[t](0) - bound}});
  }
  rank_mean /= static_cast<double>(trials);
  mad /= static_cast<double>(trials) * dim;

  std::string csv = "eig_rank,empirical_mean,predicted,abs_dev\n";
  for (int r = 0; r < dim; ++r) {
    csv += format::csv_row({std::to_string(r + 1), format::number(rank_mean(r)),
                            format::number(predicted(r)),
                            format::number(std::abs(rank_mean(r) - predicted(r)))});
  }
  record.tables["spectrum"] = csv;

  record.aggregates = {{"n", n},
                       {"k", k},
                       {"m", m},
                       {"trials", trials},
                       {"mean_abs_deviation", mad},
                       {"hayden_winter_bound", bound},
                       {"hayden_winter_violations", hw_violations}};
  if (config.params.contains("gate_mad")) {
    record.gates.push_back(upper_bound_gate("spectrum_mad", mad,
                                            require_double(config.params, "gate_mad"),
                                            "mean |empirical - predicted| over trials and ranks"));
  }
  record.gates.push_back(upper_bound_gate("hayden_winter", hw_violations, 0,
                                          "realizations with lambda_1 below the bound"));

  std::vector<double> atoms(predicted.data(), predicted.data() + predicted.size());
  record.plots.push_back(Plot{"fixed_k_spectrum", "eigenvalue", std::move(plot_samples),
                              std::move(atoms), {}});
  return record;
}

// ---------------------------------------------------------------------------
// linear-k-sim

RunRecord run_linear_k(const Config& config) {
  const int n = require_int(config.params, "n");
  const double c = require_double(config.params, "c");
  const double m = require_double(config.params, "m");
  const int trials = require_int(config.params, "trials");
  const int p_max = require_int(config.params, "p_max");
  if (trials < 2) throw UsageError("linear-k-sim: needs at least 2 trials");
  if (p_max < 2) throw UsageError("linear-k-sim: p_max must be at least 2");
  const int k = static_cast<int>(std::lround(c * n));
  if (k < 1) throw UsageError("linear-k-sim: c*n rounds to an empty block count");
  if (static_cast<long long>(n) * n * k * k > 30'000'000LL)
    throw UsageError("linear-k-sim: n^2 k^2 coefficient matrix would exceed the memory budget");
  const WeightVector w = parse_weights(config.params, k);

  // entropies are computed in nats; "bits" rescales the reported values
  double entropy_unit = 1.0;
  std::string entropy_suffix;
  if (config.params.contains("entropy_units")) {
    const auto units = config.params.at("entropy_units").get<std::string>();
    if (units == "bits") {
      entropy_unit = std::log(2.0);
      entropy_suffix = "_bits";
    } else if (units != "nats") {
      throw UsageError("linear-k-sim: entropy_units must be \"nats\" or \"bits\"");
    }
  }

  std::vector<double> t_profile;
  if (config.params.contains("t")) {
    t_profile = config.params.at("t").get<std::vector<double>>();
  } else {
    t_profile.resize(std::max(2, p_max));
    for (int p = 1; p <= static_cast<int>(t_profile.size()); ++p)
      t_profile[p - 1] = w.t_moment(p);
  }
  const auto predictions = asymptotics::linear_regime_predictions(p_max, c, t_profile, m, n);

  const InputState input = channel_lab::input_family(n, m);
  const double bound = channel_lab::hayden_winter_bound(input, w);
  const double cn = c * n;

  struct TrialRow {
    double cn_lambda1, entropy, m1, m2, hw_margin;
    std::vector<double> trace_moments;
    std::vector<double> bulk;  // (cn)^2-scaled spectrum without the top eigenvalue
  };
  std::vector<TrialRow> rows(trials);
  parallel::for_each_trial(trials, config.jobs, [&](int trial) {
    const auto realization = sampler::ChannelRealization::sample(
        n, w, config.seed, static_cast<std::uint64_t>(trial));
    const auto s = channel_lab::linear_trial_stats(realization, input);
    TrialRow row;
    row.cn_lambda1 = cn * s.lambda_max;
    row.entropy = s.entropy;
    row.m1 = cn * cn * s.trace_qzq / (static_cast<double>(n) * n);
    row.m2 = std::pow(cn, 4) * s.trace_qzq_sq / (static_cast<double>(n) * n);
    row.hw_margin = s.lambda_max - bound;
    row.trace_moments.resize(p_max);
    for (int p = 1; p <= p_max; ++p) {
      double sum = 0.0;
      for (int i = 0; i < s.eigenvalues.size(); ++i) sum += std::pow(s.eigenvalues(i), p);
      row.trace_moments[p - 1] = std::pow(cn, p) * sum;
    }
    for (int i = 1; i < s.eigenvalues.size(); ++i)
      row.bulk.push_back(cn * cn * s.eigenvalues(i));
    rows[trial] = std::move(row);
  });

  RunRecord record;
  int hw_violations = 0;
  std::vector<double> lambda1(trials), entropy(trials), m1(trials), m2(trials);
  std::vector<double> plot_samples;
  for (int t = 0; t < trials; ++t) {
    lambda1[t] = rows[t].cn_lambda1;
    entropy[t] = rows[t].entropy;
    m1[t] = rows[t].m1;
    m2[t] = rows[t].m2;
    if (rows[t].hw_margin < -kHwTolerance) ++hw_violations;
    plot_samples.insert(plot_samples.end(), rows[t].bulk.begin(), rows[t].bulk.end());
    record.per_trial.push_back({{"trial", t},
                                {"cn_lambda1", rows[t].cn_lambda1},
                                {"entropy", rows[t].entropy},
                                {"compressed_m1", rows[t].m1},
                                {"compressed_m2", rows[t].m2},
                                {"hw_margin", rows[t].hw_margin}});
  }

  struct Quantity {
    std::string name;
    std::vector<double>* samples;
    double predicted;
  };
  if (entropy_unit != 1.0) {
    for (double& h : entropy) h /= entropy_unit;
  }
  const double entropy_predicted =
      predictions.entropy ? *predictions.entropy / entropy_unit
                          : std::numeric_limits<double>::quiet_NaN();
  std::vector<Quantity> quantities = {
      {"cn_lambda1", &lambda1, predictions.top_eigenvalue},
      {"entropy" + entropy_suffix, &entropy, entropy_predicted},
      {"compressed_m1", &m1, predictions.compressed_moments[0]},
      {"compressed_m2", &m2, predictions.compressed_moments[1]},
  };
  std::string csv = "quantity,empirical_mean,std_error,predicted,rel_dev\n";
  json aggregate_quantities = json::object();
  for (const auto& q : quantities) {
    const double mean = stats::mean(*q.samples);
    const double se = stats::standard_error(*q.samples);
    const double rel = std::isnan(q.predicted) ? std::numeric_limits<double>::quiet_NaN()
                                               : std::abs(mean - q.predicted) / std::abs(q.predicted);
    csv += format::csv_row({q.name, format::number(mean), format::number(se),
                            std::isnan(q.predicted) ? "" : format::number(q.predicted),
                            std::isnan(rel) ? "" : format::number(rel)});
    aggregate_quantities[q.name] = {{"mean", mean}, {"stderr", se}};
    if (!std::isnan(q.predicted)) {
      aggregate_quantities[q.name]["predicted"] = q.predicted;
      aggregate_quantities[q.name]["rel_dev"] = rel;
    }
  }
  record.tables["summary"] = csv;

  moment_engine::MomentSeries series;
  series.regime = "linear";
  series.metadata = {{"n", n}, {"k", k}, {"c", c}, {"m", m}, {"trials", trials}, {"seed", config.seed}};
  std::vector<double> column(trials);
  for (int p = 1; p <= p_max; ++p) {
    for (int t = 0; t < trials; ++t) column[t] = rows[t].trace_moments[p - 1];
    series.moments[p] = moment_engine::MomentEntry{stats::mean(column), stats::standard_error(column),
                                                   p == 1};
    series.predictions[p] = predictions.rescaled_trace_moments[p - 1];
  }
  record.tables["moments"] = series.to_csv();

  record.aggregates = {{"n", n},
                       {"k", k},
                       {"c", c},
                       {"m", m},
                       {"trials", trials},
                       {"quantities", aggregate_quantities},
                       {"predictions", predictions.to_json()},
                       {"hayden_winter_violations", hw_violations}};

  auto add_rel_gate = [&](const char* param, const char* name, double mean, double predicted) {
    if (!config.params.contains(param)) return;
    if (std::isnan(predicted))
      throw UsageError(std::string(name) + ": no closed-form prediction for this weight profile");
    const double rel = std::abs(mean - predicted) / std::abs(predicted);
    record.gates.push_back(upper_bound_gate(name, rel, require_double(config.params, param)));
  };
  add_rel_gate("gate_lambda1_rel", "lambda1_rel_dev", stats::mean(lambda1),
               predictions.top_eigenvalue);
  add_rel_gate("gate_entropy_rel", "entropy_rel_dev", stats::mean(entropy), entropy_predicted);
  add_rel_gate("gate_moments_rel", "compressed_m1_rel_dev", stats::mean(m1),
               predictions.compressed_moments[0]);
  add_rel_gate("gate_moments_rel", "compressed_m2_rel_dev", stats::mean(m2),
               predictions.compressed_moments[1]);
  record.gates.push_back(upper_bound_gate("hayden_winter", hw_violations, 0,
                                          "realizations with lambda_1 below the bound"));

  record.plots.push_back(Plot{"compressed_spectrum",
                              "(cn)^2 x eigenvalue (bulk)",
                              std::move(plot_samples),
                              {},
                              {{"predicted m1", predictions.compressed_moments[0]},
                               {"predicted m2", predictions.compressed_moments[1]}}});
  return record;
}

// ---------------------------------------------------------------------------
// moments-check

RunRecord run_moments_check(const Config& config) {
  const int n = require_int(config.params, "n");
  const int k = require_int(config.params, "k");
  const double m = require_double(config.params, "m");
  const int trials = require_int(config.params, "trials");
  const int p_max = require_int(config.params, "p_max");
  const double gate_z =
      config.params.contains("gate_z") ? require_double(config.params, "gate_z") : 3.0;
  const WeightVector w = parse_weights(config.params, k);
  const InputState input = channel_lab::input_family(n, m);

  std::map<int, double> exact;
  try {
    for (int p = 1; p <= p_max; ++p) exact[p] = moment_engine::exact_moment(p, n, w, input);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("moments-check: ") + e.what());
  }

  moment_engine::McMomentConfig mc;
  mc.regime = Regime::kFixedK;
  mc.n = n;
  mc.weights = w;
  mc.m = m;
  mc.p_max = p_max;
  mc.trials = trials;
  mc.seed = config.seed;
  mc.jobs = config.jobs;
  auto series = moment_engine::mc_moment(mc);
  series.predictions = exact;

  RunRecord record;
  record.tables["moments"] = series.to_csv();
  double worst_z = 0.0;
  for (const auto& [p, entry] : series.moments) {
    if (!entry.exact && entry.std_error > 0.0)
      worst_z = std::max(worst_z, std::abs(entry.estimate - exact.at(p)) / entry.std_error);
  }
  record.gates.push_back(upper_bound_gate("oracle_z_score", worst_z, gate_z,
                                          "max |mc - exact| / stderr over p"));
  record.aggregates = {{"n", n}, {"k", k}, {"m", m}, {"trials", trials},
                       {"exact", exact}, {"series", series.to_json()}};
  return record;
}

// ---------------------------------------------------------------------------
// identity-check

RunRecord run_identity_check(const Config& config) {
  const int instances = require_int(config.params, "instances");
  const int p_max = require_int(config.params, "p_max");
  const int k_max = require_int(config.params, "k_max");
  const double tolerance = require_double(config.params, "tolerance");
  if (instances < 1) throw UsageError("identity-check: instances must be positive");
  if (p_max < 1 || p_max > 8) throw UsageError("identity-check: p_max must lie in [1, 8]");
  if (k_max < 1 || k_max > 6) throw UsageError("identity-check: k_max must lie in [1, 6]");

  std::string csv = "check,instance,p,k,lhs,rhs,abs_err\n";
  double worst_subset = 0.0;
  double worst_diagram = 0.0;

  for (int i = 0; i < instances; ++i) {
    auto stream = rng::derive_stream(config.seed, {0, static_cast<std::uint64_t>(i)});
    const int p = 1 + static_cast<int>(stream.next_u64() % p_max);
    const int k = 1 + static_cast<int>(stream.next_u64() % k_max);
    const double x = stream.uniform01();
    const double y = stream.uniform01();
    const WeightVector w{random_simplex(stream, k)};
    const double lhs = moment_engine::technical_identity_lhs(p, x, y, w);
    const RVec s = asymptotics::s_function(x, y, w);
    double rhs = -std::pow(x, p) * w.trace_power(2 * p);
    for (int q = 0; q < s.size(); ++q) rhs += std::pow(s(q), p);
    const double err = std::abs(lhs - rhs);
    worst_subset = std::max(worst_subset, err);
    csv += format::csv_row({"subset_sum_vs_spectrum", std::to_string(i), std::to_string(p),
                            std::to_string(k), format::number(lhs), format::number(rhs),
                            format::number(err)});
  }

  const int diagram_p_max = std::min(p_max, 6);
  for (int i = 0; i < instances; ++i) {
    auto stream = rng::derive_stream(config.seed, {1, static_cast<std::uint64_t>(i)});
    const int p = 1 + static_cast<int>(stream.next_u64() % diagram_p_max);
    const int k = 1 + static_cast<int>(stream.next_u64() % std::min(k_max, 5));
    const double m = stream.uniform01();
    const WeightVector w{random_simplex(stream, k)};
    const double lhs = moment_engine::diagrammatic_limit_moment(p, w, m);
    const double rhs = asymptotics::fixed_k_limit_moment(p, w, m);
    const double err = std::abs(lhs - rhs);
    worst_diagram = std::max(worst_diagram, err);
    csv += format::csv_row({"geodesic_vs_limit_moment", std::to_string(i), std::to_string(p),
                            std::to_string(k), format::number(lhs), format::number(rhs),
                            format::number(err)});
  }

  RunRecord record;
  record.tables["identity"] = csv;
  record.gates.push_back(upper_bound_gate("subset_sum_identity", worst_subset, tolerance));
  record.gates.push_back(upper_bound_gate("geodesic_moment_identity", worst_diagram, tolerance));
  record.aggregates = {{"instances", instances},
                       {"p_max", p_max},
                       {"k_max", k_max},
                       {"worst_subset_err", worst_subset},
                       {"worst_diagram_err", worst_diagram}};
  return record;
}

// ---------------------------------------------------------------------------
// compare-rc-ruc

RunRecord run_rc_ruc(const Config& config) {
  const int k = require_int(config.params, "k");
  const double m = require_double(config.params, "m");
  const auto [rc, ruc] = asymptotics::rc_vs_ruc(k, m);

  std::string csv = "rank,rc,ruc\n";
  double sum_rc = 0.0, sum_ruc = 0.0;
  for (std::size_t r = 0; r < rc.size(); ++r) {
    sum_rc += rc[r];
    sum_ruc += ruc[r];
    csv += format::csv_row(
        {std::to_string(r + 1), format::number(rc[r]), format::number(ruc[r])});
  }

  RunRecord record;
  record.tables["rc_vs_ruc"] = csv;
  record.gates.push_back(upper_bound_gate("rc_sum", std::abs(sum_rc - 1.0), 1e-12));
  record.gates.push_back(upper_bound_gate("ruc_sum", std::abs(sum_ruc - 1.0), 1e-12));
  record.aggregates = {{"k", k}, {"m", m}, {"rc", rc}, {"ruc", ruc}};
  return record;
}

}  // namespace

Config Config::from_json(const json& j) {
  Config config;
  if (!j.contains("experiment") || !j.at("experiment").is_string())
    throw UsageError("config: missing experiment name");
  config.experiment = j.at("experiment").get<std::string>();
  if (!j.contains("seed") || !j.at("seed").is_number_integer())
    throw UsageError("config: missing integer seed");
  config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("jobs")) config.jobs = j.at("jobs").get<int>();
  if (config.jobs < 1) throw UsageError("config: jobs must be positive");
  if (j.contains("out")) config.out_dir = j.at("out").get<std::string>();
  if (j.contains("formats")) {
    config.formats = j.at("formats").get<std::vector<std::string>>();
  }
  for (const auto& f : config.formats) {
    if (f != "csv" && f != "json" && f != "svg")
      throw UsageError("config: unknown output format '" + f + "'");
  }
  config.params = j.contains("params") ? j.at("params") : json::object();
  if (!config.params.is_object()) throw UsageError("config: params must be an object");
  return config;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config: parse failure in '" + path + "': " + e.what());
  }
  return from_json(j);
}

json Config::to_json() const {
  return json{{"experiment", experiment}, {"seed", seed},       {"jobs", jobs},
              {"out", out_dir},           {"formats", formats}, {"params", params}};
}

bool RunRecord::passed() const {
  for (const auto& gate : gates) {
    if (!gate.passed) return false;
  }
  return true;
}

json RunRecord::to_json() const {
  json gate_rows = json::array();
  for (const auto& gate : gates) {
    gate_rows.push_back({{"name", gate.name},
                         {"passed", gate.passed},
                         {"value", gate.value},
                         {"threshold", gate.threshold},
                         {"detail", gate.detail}});
  }
  std::vector<std::string> table_names;
  for (const auto& [name, text] : tables) table_names.push_back(name);
  return json{{"config", config_echo},   {"seed", seed},
              {"version", version},      {"gates", gate_rows},
              {"aggregates", aggregates}, {"per_trial", per_trial},
              {"tables", table_names},   {"wall_seconds", wall_seconds}};
}

RunRecord run_experiment(const Config& config) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord record;
  if (config.experiment == "wg-table") {
    record = run_wg_table(config);
  } else if (config.experiment == "fixed-k-sim") {
    record = run_fixed_k(config);
  } else if (config.experiment == "linear-k-sim") {
    record = run_linear_k(config);
  } else if (config.experiment == "moments-check") {
    record = run_moments_check(config);
  } else if (config.experiment == "identity-check") {
    record = run_identity_check(config);
  } else if (config.experiment == "compare-rc-ruc") {
    record = run_rc_ruc(config);
  } else {
    throw UsageError("unknown experiment '" + config.experiment + "'");
  }
  record.config_echo = config.to_json();
  record.seed = config.seed;
  record.version = RUCLAB_VERSION;
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace ruclab::experiment
