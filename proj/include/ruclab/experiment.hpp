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
// Reproducible experiment runner: parses a JSON config, executes one named
// experiment, collects gate results and tables, and renders CSV/JSON/SVG
// outputs. Identical (config, seed) pairs reproduce aggregate tables
// byte-for-byte regardless of the worker count.

#ifndef RUCLAB_EXPERIMENT_HPP_
#define RUCLAB_EXPERIMENT_HPP_

#include <json.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ruclab::experiment {

// bad experiment name, malformed config, missing/invalid parameters, caps
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string experiment;  // wg-table | fixed-k-sim | linear-k-sim |
                           // moments-check | identity-check | compare-rc-ruc
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_dir;                 // empty: nothing rendered
  std::vector<std::string> formats = {"csv", "json"};
  nlohmann::json params;               // experiment parameters, all explicit

  static Config from_file(const std::string& path);
  static Config from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct GateResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured quantity
  double threshold = 0.0;  // bound it was compared against
  std::string detail;
};

struct Plot {
  std::string name;
  std::string x_label;
  std::vector<double> samples;                               // histogrammed
  std::vector<double> atoms;                                 // vertical markers
  std::vector<std::pair<std::string, double>> annotations;   // legend lines
};

struct RunRecord {
  nlohmann::json config_echo;
  std::uint64_t seed = 0;
  std::string version;
  nlohmann::json per_trial = nlohmann::json::array();
  std::map<std::string, std::string> tables;  // table name -> CSV text
  nlohmann::json aggregates;
  std::vector<GateResult> gates;
  std::vector<Plot> plots;
  double wall_seconds = 0.0;

  bool passed() const;
  nlohmann::json to_json() const;
};

RunRecord run_experiment(const Config& config);

// writes {table}.csv, run_record.json and {plot}.svg under out_dir for the
// requested formats; an empty format list writes nothing
void render_outputs(const RunRecord& record, const std::vector<std::string>& formats,
                    const std::string& out_dir);

// full command-line entry point; returns the process exit code
// (0 pass, 1 tolerance-gate failure, 2 usage error)
int cli_main(int argc, const char* const* argv);

}  // namespace ruclab::experiment

#endif  // RUCLAB_EXPERIMENT_HPP_
