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

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "ruclab/experiment.hpp"
#include "ruclab/format.hpp"

namespace ruclab::experiment {

namespace {

std::vector<std::string> split_formats(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : csv + ',') {
    if (ch == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"random unitary channel lab: run a configured experiment and "
               "compare Monte Carlo data against closed-form predictions"};
  std::string config_path;
  std::string out_dir;
  std::string formats;
  std::uint64_t seed = 0;
  int jobs = 0;
  app.add_option("--config", config_path, "experiment config (JSON)")->required();
  auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
  app.add_option("--out", out_dir, "output directory (overrides config)");
  app.add_option("--formats", formats, "comma-separated subset of csv,json,svg");
  app.add_option("--jobs", jobs, "worker count for Monte Carlo trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Config config = Config::from_file(config_path);
    if (seed_opt->count() > 0) config.seed = seed;
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (!formats.empty()) {
      config.formats = split_formats(formats);
      for (const auto& f : config.formats) {
        if (f != "csv" && f != "json" && f != "svg")
          throw UsageError("unknown output format '" + f + "'");
      }
    }
    if (jobs > 0) config.jobs = jobs;

    const RunRecord record = run_experiment(config);
    render_outputs(record, config.formats, config.out_dir);

    for (const auto& gate : record.gates) {
      std::printf("[%s] %s: value %s vs threshold %s%s%s\n", gate.passed ? "PASS" : "FAIL",
                  gate.name.c_str(), format::number(gate.value).c_str(),
                  format::number(gate.threshold).c_str(), gate.detail.empty() ? "" : " -- ",
                  gate.detail.c_str());
    }
    const std::string suffix =
        config.out_dir.empty() ? std::string() : (", outputs in " + config.out_dir);
    std::printf("%s: experiment %s, seed %llu, %.2fs%s\n", record.passed() ? "PASS" : "FAIL",
                config.experiment.c_str(), static_cast<unsigned long long>(record.seed),
                record.wall_seconds, suffix.c_str());
    return record.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace ruclab::experiment
