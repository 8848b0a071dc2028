// Copyright 2026 The qdenoise Authors
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

// Command-line front end: single-signal denoising, config-driven
// experiments and the oracle-equivalence self-test.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qdenoise/encoding/signal_io.hpp"
#include "qdenoise/errors.hpp"
#include "qdenoise/harness/config.hpp"
#include "qdenoise/harness/experiment.hpp"
#include "qdenoise/harness/metrics.hpp"
#include "qdenoise/harness/selftest.hpp"

namespace {

using namespace qdenoise;

harness::ExperimentConfig resolve(const std::string& config_path,
                                  const std::optional<std::string>& profile) {
  if (!config_path.empty()) return harness::load_config(config_path, profile);
  return harness::profile_config(profile.value_or("desk"));
}

int run_denoise(const std::string& config_path, const std::optional<std::string>& profile,
                const std::string& in_path, const std::string& out_path,
                const std::string& method_name, const std::string& scenario_name,
                std::optional<double> keep, std::optional<std::uint64_t> seed,
                const std::string& report_path) {
  const auto exp = resolve(config_path, profile);
  const auto method = pipeline::parse_method(method_name);
  pipeline::DenoiseConfig cfg = exp.scenarios.front().config;
  cfg.noise = {};
  if (!scenario_name.empty()) {
    const auto it = std::find_if(exp.scenarios.begin(), exp.scenarios.end(),
                                 [&](const auto& s) { return s.name == scenario_name; });
    if (it == exp.scenarios.end()) throw ConfigError("no scenario named '" + scenario_name + "'");
    cfg = it->config;
  }
  cfg.noise.seed = seed.value_or(exp.seed);
  if (keep) cfg.baseline_keep_fraction = *keep;

  const auto input = encoding::read_signal(std::filesystem::path(in_path));
  const auto run = pipeline::run_with_noise(method, input, cfg);
  encoding::write_signal(std::filesystem::path(out_path), run.result.denoised);

  nlohmann::json j;
  j["method"] = pipeline::to_string(method);
  j["samples"] = run.result.denoised.size();
  j["noise"] = cfg.noise.describe();
  j["iterations_used"] = run.result.iterations_used;
  j["phase_matched_round"] = run.result.phase_matched_round;
  j["marked_probability_before"] = run.result.marked_probability_before;
  j["marked_probability_after"] = run.result.marked_probability_after;
  j["marked_counts"] = run.result.marked_counts;
  j["clamped_samples"] = run.result.clamped_samples;
  j["transform_gates"] = run.result.transform_gates;
  j["noise_ops_injected"] = run.result.noise_ops_injected;
  if (cfg.noise.classical) {
    j["snr_noisy_vs_input_db"] = harness::snr_db(input, run.noisy);
  }
  if (report_path.empty()) {
    std::cerr << j.dump(2) << "\n";
  } else {
    std::ofstream(report_path) << j.dump(2) << "\n";
  }
  return 0;
}

int run_experiment_cmd(const std::string& config_path, const std::optional<std::string>& profile,
                       const std::string& out_dir, std::optional<std::uint64_t> seed,
                       std::optional<int> threads, std::optional<int> trials) {
  auto exp = resolve(config_path, profile);
  if (seed) exp.seed = *seed;
  if (threads) exp.threads = *threads;
  if (trials) {
    exp.trials = *trials;
    exp.trace_trial = std::min(exp.trace_trial, exp.trials - 1);
  }
  const auto report = harness::run_experiment(exp);
  harness::write_report(report, out_dir);
  harness::emit_plot_data(report, out_dir);
  std::cout << harness::summarize(report);
  return report.errors == 0 ? 0 : 1;
}

int run_selftest_cmd(std::uint64_t seed) {
  bool ok = true;
  for (const auto& c : harness::run_selftest(seed)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  (worst " << c.worst << ", tol "
              << c.tolerance << ")\n";
    ok = ok && c.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segment-adaptive quantum signal denoising simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> profile;
  std::optional<std::uint64_t> seed;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config file")->check(CLI::ExistingFile);
    sub->add_option("--profile", profile, "smoke, desk or full")
        ->check(CLI::IsMember({"smoke", "desk", "full"}));
    sub->add_option("--seed", seed, "base seed");
  };

  auto* denoise = app.add_subcommand("denoise", "denoise one signal file");
  add_common(denoise);
  std::string in_path;
  std::string out_path;
  std::string method = "proposed";
  std::string scenario;
  std::optional<double> keep;
  std::string report_path;
  denoise->add_option("--in", in_path, "input signal (one value per line or CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  denoise->add_option("--out", out_path, "output signal file")->required();
  denoise->add_option("--method", method, "proposed, qft, qwt or none");
  denoise->add_option("--scenario", scenario, "apply this scenario's simulated noise");
  denoise->add_option("--keep", keep, "baseline keep fraction");
  denoise->add_option("--report", report_path, "write diagnostics JSON here (default stderr)");

  auto* experiment = app.add_subcommand("experiment", "run a config-driven batch");
  add_common(experiment);
  std::string out_dir = "results";
  std::optional<int> threads;
  std::optional<int> trials;
  experiment->add_option("--out", out_dir, "output directory");
  experiment->add_option("--threads", threads, "worker threads (0: all cores)");
  experiment->add_option("--trials", trials, "override the trial count");

  auto* selftest = app.add_subcommand("selftest", "run the oracle-equivalence checks");
  std::uint64_t selftest_seed = 1;
  selftest->add_option("--seed", selftest_seed, "seed for random instances");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*denoise) {
      return run_denoise(config_path, profile, in_path, out_path, method, scenario, keep, seed,
                         report_path);
    }
    if (*experiment) return run_experiment_cmd(config_path, profile, out_dir, seed, threads, trials);
    return run_selftest_cmd(selftest_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
