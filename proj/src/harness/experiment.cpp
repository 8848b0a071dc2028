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

#include "qdenoise/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "qdenoise/errors.hpp"
#include "qdenoise/harness/metrics.hpp"

namespace qdenoise::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_baseline(pipeline::Method method) {
  return method == pipeline::Method::qft || method == pipeline::Method::qwt;
}

struct Task {
  std::size_t scenario = 0;
  pipeline::Method method = pipeline::Method::proposed;
  double keep = 1.0;
  int trial = 0;
};

struct TaskResult {
  TrialRow row;
  std::vector<double> noisy;
  std::vector<double> denoised;
};

std::string csv_field(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

std::string trace_column(pipeline::Method method) {
  if (is_baseline(method)) return std::string(pipeline::to_string(method)) + "-baseline";
  return std::string(pipeline::to_string(method));
}

}  // namespace

const AggregateRow* ExperimentReport::find(std::string_view scenario,
                                           pipeline::Method method) const {
  for (const auto& agg : aggregates) {
    if (agg.scenario == scenario && agg.method == method) return &agg;
  }
  return nullptr;
}

std::pair<double, double> mean_and_std(const std::vector<double>& values) {
  if (values.empty()) return {kNaN, kNaN};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  if (!std::isfinite(mean)) return {mean, kNaN};
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size() - 1))};
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.config = config;

  std::vector<std::uint64_t> trial_seeds(static_cast<std::size_t>(config.trials));
  std::vector<std::vector<double>> clean(trial_seeds.size());
  for (std::size_t t = 0; t < trial_seeds.size(); ++t) {
    trial_seeds[t] = noise::derive_seed(config.seed, t);
    std::mt19937_64 rng(noise::derive_seed(trial_seeds[t], 2));
    clean[t] = generate_signal(config.signal, rng);
  }

  std::vector<Task> tasks;
  for (std::size_t s = 0; s < config.scenarios.size(); ++s) {
    for (auto method : config.methods) {
      const std::vector<double> keeps =
          is_baseline(method) ? config.keep_fractions : std::vector<double>{1.0};
      for (double keep : keeps) {
        for (int t = 0; t < config.trials; ++t) tasks.push_back({s, method, keep, t});
      }
    }
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      const Scenario& scenario = config.scenarios[task.scenario];
      const auto t = static_cast<std::size_t>(task.trial);
      TaskResult& out = results[i];
      TrialRow& row = out.row;
      row.scenario = scenario.name;
      row.method = task.method;
      row.trial = task.trial;
      row.seed = trial_seeds[t];
      row.keep_fraction = task.keep;
      row.snr_in_db = row.snr_out_db = row.psnr_out_db = kNaN;

      auto cfg = scenario.config;
      cfg.baseline_keep_fraction = task.keep;
      cfg.noise.seed = noise::derive_seed(trial_seeds[t], 1000 + task.scenario);
      const auto start = std::chrono::steady_clock::now();
      try {
        auto run = pipeline::run_with_noise(task.method, clean[t], cfg);
        row.snr_in_db = snr_db(clean[t], run.noisy);
        row.snr_out_db = snr_db(clean[t], run.result.denoised);
        row.psnr_out_db = psnr_db(clean[t], run.result.denoised);
        row.iterations_used = run.result.iterations_used;
        row.clamped_samples = run.result.clamped_samples;
        if (task.trial == config.trace_trial) {
          out.noisy = std::move(run.noisy);
          out.denoised = std::move(run.result.denoised);
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t pool = std::min<std::size_t>(
      tasks.size(), config.threads > 0 ? static_cast<std::size_t>(config.threads) : hw);
  {
    std::vector<std::jthread> threads;
    for (std::size_t k = 1; k < pool; ++k) threads.emplace_back(worker);
    worker();
  }

  // Pick each baseline's keep fraction by best mean PSNR (ties: first listed).
  std::map<std::pair<std::size_t, pipeline::Method>, double> chosen;
  for (std::size_t s = 0; s < config.scenarios.size(); ++s) {
    for (auto method : config.methods) {
      if (!is_baseline(method)) continue;
      std::size_t first_row = report.keep_search.size();
      double best = -std::numeric_limits<double>::infinity();
      std::size_t best_row = first_row;
      for (double keep : config.keep_fractions) {
        std::vector<double> psnr;
        for (const auto& r : results) {
          if (r.row.scenario == config.scenarios[s].name && r.row.method == method &&
              r.row.keep_fraction == keep && r.row.error.empty()) {
            psnr.push_back(r.row.psnr_out_db);
          }
        }
        const double mean = mean_and_std(psnr).first;
        if (mean > best) {
          best = mean;
          best_row = report.keep_search.size();
        }
        report.keep_search.push_back({config.scenarios[s].name, method, keep, mean, false});
      }
      report.keep_search[best_row].selected = true;
      chosen[{s, method}] = report.keep_search[best_row].keep_fraction;
    }
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    if (is_baseline(task.method) && chosen[{task.scenario, task.method}] != task.keep) continue;
    report.rows.push_back(results[i].row);
    if (!results[i].row.error.empty()) ++report.errors;
  }

  for (std::size_t s = 0; s < config.scenarios.size(); ++s) {
    const auto& name = config.scenarios[s].name;
    Trace trace;
    trace.scenario = name;
    trace.clean = clean[static_cast<std::size_t>(config.trace_trial)];
    for (auto method : config.methods) {
      AggregateRow agg;
      agg.scenario = name;
      agg.method = method;
      agg.keep_fraction = is_baseline(method) ? chosen[{s, method}] : 1.0;
      std::vector<double> snr_in;
      std::vector<double> snr_out;
      std::vector<double> psnr_out;
      for (const auto& row : report.rows) {
        if (row.scenario != name || row.method != method || !row.error.empty()) continue;
        snr_in.push_back(row.snr_in_db);
        snr_out.push_back(row.snr_out_db);
        psnr_out.push_back(row.psnr_out_db);
      }
      agg.count = psnr_out.size();
      agg.snr_in_mean = mean_and_std(snr_in).first;
      std::tie(agg.snr_out_mean, agg.snr_out_std) = mean_and_std(snr_out);
      std::tie(agg.psnr_out_mean, agg.psnr_out_std) = mean_and_std(psnr_out);
      report.aggregates.push_back(agg);

      for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& task = tasks[i];
        if (task.scenario != s || task.method != method || task.trial != config.trace_trial ||
            task.keep != agg.keep_fraction) {
          continue;
        }
        if (trace.noisy.empty()) trace.noisy = results[i].noisy;
        trace.outputs.emplace_back(method, results[i].denoised);
      }
    }
    report.traces.push_back(std::move(trace));
  }
  return report;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto header = "# " + std::string(kPsnrConvention) + "\n";
  std::map<std::string, std::string> noise_names;
  for (const auto& s : report.config.scenarios) noise_names[s.name] = s.config.noise.describe();

  auto rows = open_out(out_dir / "rows.csv");
  rows << header
       << "scenario,method,noise,trial,seed,keep_fraction,snr_in_db,snr_out_db,psnr_out_db,"
          "iterations_used,clamped_samples,error\n";
  auto timing = open_out(out_dir / "timing.csv");
  timing << "scenario,method,trial,runtime_ms\n";
  for (const auto& r : report.rows) {
    rows << r.scenario << ',' << pipeline::to_string(r.method) << ','
         << csv_field(noise_names[r.scenario]) << ',' << r.trial << ',' << r.seed << ','
         << format_number(r.keep_fraction) << ',' << format_number(r.snr_in_db) << ','
         << format_number(r.snr_out_db) << ',' << format_number(r.psnr_out_db) << ','
         << r.iterations_used << ',' << r.clamped_samples << ',' << csv_field(r.error) << '\n';
    timing << r.scenario << ',' << pipeline::to_string(r.method) << ',' << r.trial << ','
           << format_number(r.runtime_ms) << '\n';
  }

  auto agg = open_out(out_dir / "aggregate.csv");
  agg << header
      << "scenario,method,keep_fraction,count,snr_in_mean,snr_out_mean,snr_out_std,"
         "psnr_out_mean,psnr_out_std\n";
  for (const auto& a : report.aggregates) {
    agg << a.scenario << ',' << pipeline::to_string(a.method) << ','
        << format_number(a.keep_fraction) << ',' << a.count << ','
        << format_number(a.snr_in_mean) << ',' << format_number(a.snr_out_mean) << ','
        << format_number(a.snr_out_std) << ',' << format_number(a.psnr_out_mean) << ','
        << format_number(a.psnr_out_std) << '\n';
  }

  auto keep = open_out(out_dir / "keep_search.csv");
  keep << "scenario,method,keep_fraction,psnr_out_mean,selected\n";
  for (const auto& k : report.keep_search) {
    keep << k.scenario << ',' << pipeline::to_string(k.method) << ','
         << format_number(k.keep_fraction) << ',' << format_number(k.psnr_out_mean) << ','
         << (k.selected ? 1 : 0) << '\n';
  }

  auto summary = open_out(out_dir / "summary.txt");
  summary << summarize(report);
}

void emit_plot_data(const ExperimentReport& report, const std::filesystem::path& out_dir) {
  if (report.rows.empty()) throw Error("empty report");
  const auto dir = out_dir / "plot";
  std::filesystem::create_directories(dir);
  for (const auto& trace : report.traces) {
    auto out = open_out(dir / ("trace_" + trace.scenario + ".csv"));
    out << "index,clean,noisy";
    for (const auto& [method, values] : trace.outputs) {
      if (method != pipeline::Method::none) out << ',' << trace_column(method);
    }
    out << '\n';
    for (std::size_t i = 0; i < trace.clean.size(); ++i) {
      out << i << ',' << format_number(trace.clean[i]) << ','
          << (i < trace.noisy.size() ? format_number(trace.noisy[i]) : "nan");
      for (const auto& [method, values] : trace.outputs) {
        if (method == pipeline::Method::none) continue;
        out << ',' << (i < values.size() ? format_number(values[i]) : "nan");
      }
      out << '\n';
    }
  }
  auto bars = open_out(dir / "bars.csv");
  bars << "scenario,method,psnr_out_mean,psnr_out_std,snr_out_mean,snr_out_std\n";
  for (const auto& a : report.aggregates) {
    bars << a.scenario << ',' << pipeline::to_string(a.method) << ','
         << format_number(a.psnr_out_mean) << ',' << format_number(a.psnr_out_std) << ','
         << format_number(a.snr_out_mean) << ',' << format_number(a.snr_out_std) << '\n';
  }
}

std::string summarize(const ExperimentReport& report) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "profile " << report.config.profile << ", " << report.config.trials
      << " trials, seed " << report.config.seed << "\n"
      << kPsnrConvention << "\n\n";
  for (const auto& scenario : report.config.scenarios) {
    out << "[" << scenario.name << "] " << scenario.config.noise.describe() << "\n";
    double best_baseline = -std::numeric_limits<double>::infinity();
    for (const auto& a : report.aggregates) {
      if (a.scenario != scenario.name) continue;
      out << "  " << pipeline::to_string(a.method);
      if (is_baseline(a.method)) out << " (keep " << a.keep_fraction << ")";
      out << ": psnr " << a.psnr_out_mean << " +- " << a.psnr_out_std << " dB, snr "
          << a.snr_in_mean << " -> " << a.snr_out_mean << " dB\n";
      if (is_baseline(a.method)) best_baseline = std::max(best_baseline, a.psnr_out_mean);
    }
    if (const auto* proposed = report.find(scenario.name, pipeline::Method::proposed);
        proposed && std::isfinite(best_baseline)) {
      out << "  proposed - best baseline: " << proposed->psnr_out_mean - best_baseline
          << " dB\n";
    }
  }
  if (report.errors > 0) out << "\n" << report.errors << " trial(s) failed; see rows.csv\n";
  return out.str();
}

}  // namespace qdenoise::harness
