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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qdenoise/harness/config.hpp"

namespace qdenoise::harness {

/// PSNR convention stated in every report header.
inline constexpr std::string_view kPsnrConvention =
    "psnr peak = max(clean) - min(0, min(clean)) on the clean reference's original scale";

struct TrialRow {
  std::string scenario;
  pipeline::Method method = pipeline::Method::proposed;
  int trial = 0;
  std::uint64_t seed = 0;
  double keep_fraction = 1.0;  // baselines only; 1 for the others
  double snr_in_db = 0.0;
  double snr_out_db = 0.0;
  double psnr_out_db = 0.0;
  double runtime_ms = 0.0;
  int iterations_used = 0;
  std::size_t clamped_samples = 0;
  std::string error;  // empty on success
};

struct AggregateRow {
  std::string scenario;
  pipeline::Method method = pipeline::Method::proposed;
  double keep_fraction = 1.0;
  std::size_t count = 0;
  double snr_in_mean = 0.0;
  double snr_out_mean = 0.0;
  double snr_out_std = 0.0;
  double psnr_out_mean = 0.0;
  double psnr_out_std = 0.0;
};

/// Mean PSNR of a baseline at one keep fraction; `selected` marks the
/// fraction reported in rows and aggregates.
struct KeepSearchRow {
  std::string scenario;
  pipeline::Method method = pipeline::Method::qft;
  double keep_fraction = 0.0;
  double psnr_out_mean = 0.0;
  bool selected = false;
};

struct Trace {
  std::string scenario;
  std::vector<double> clean;
  std::vector<double> noisy;
  std::vector<std::pair<pipeline::Method, std::vector<double>>> outputs;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRow> rows;  // sorted by scenario order, method order, trial
  std::vector<AggregateRow> aggregates;
  std::vector<KeepSearchRow> keep_search;
  std::vector<Trace> traces;  // one per scenario, for config.trace_trial
  std::size_t errors = 0;

  const AggregateRow* find(std::string_view scenario, pipeline::Method method) const;
};

/// Runs every (scenario, method, keep fraction, trial) task on a bounded
/// worker pool. Trial t uses seed derive_seed(config.seed, t); its clean
/// signal is shared by all scenarios and its noise draw by all methods.
/// Per-trial failures are recorded in the row's error field.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Mean and sample standard deviation (0 for a single value).
std::pair<double, double> mean_and_std(const std::vector<double>& values);

/// rows.csv, aggregate.csv, keep_search.csv (deterministic), timing.csv
/// (wall clock) and summary.txt.
void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir);

/// plot/trace_<scenario>.csv (index, clean, noisy, one column per method)
/// and plot/bars.csv (one row per method x scenario).
void emit_plot_data(const ExperimentReport& report, const std::filesystem::path& out_dir);

/// Short human-readable table of aggregates with the proposed-vs-baseline gaps.
std::string summarize(const ExperimentReport& report);

}  // namespace qdenoise::harness
