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

#include "qdenoise/pipeline/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qdenoise/circuits/amplification.hpp"
#include "qdenoise/circuits/qft.hpp"
#include "qdenoise/circuits/qwt.hpp"
#include "qdenoise/encoding/quantum_encoding.hpp"
#include "qdenoise/errors.hpp"

namespace qdenoise::pipeline {
namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view text, const std::pair<std::string_view, Enum> (&names)[N],
                const char* what) {
  for (const auto& [name, value] : names) {
    if (name == text) return value;
  }
  throw std::invalid_argument("unknown " + std::string(what) + " '" + std::string(text) + "'");
}

constexpr std::pair<std::string_view, IterationMode> kIterationModes[] = {
    {"oracle-exact", IterationMode::oracle_exact}, {"count-formula", IterationMode::count_formula}};
constexpr std::pair<std::string_view, AmplificationMode> kAmplificationModes[] = {
    {"exact", AmplificationMode::exact}, {"standard", AmplificationMode::standard}};
constexpr std::pair<std::string_view, DiffusionMode> kDiffusionModes[] = {
    {"prepared-state", DiffusionMode::prepared_state}, {"uniform", DiffusionMode::uniform}};
constexpr std::pair<std::string_view, Backend> kBackends[] = {{"compact", Backend::compact},
                                                              {"full", Backend::full}};
constexpr std::pair<std::string_view, Method> kMethods[] = {{"proposed", Method::proposed},
                                                            {"qft", Method::qft},
                                                            {"qwt", Method::qwt},
                                                            {"none", Method::none}};
constexpr std::pair<std::string_view, QwtDepth> kQwtDepths[] = {{"full", QwtDepth::full},
                                                                {"minimal", QwtDepth::minimal}};

template <typename Enum, std::size_t N>
std::string_view name_of(Enum value, const std::pair<std::string_view, Enum> (&names)[N]) {
  for (const auto& [name, v] : names) {
    if (v == value) return name;
  }
  return "?";
}

// Encoded input shared by all methods: same quantization, same state
// preparation, same decode slots.
struct Encoded {
  encoding::SegmentedSignal sig;
  encoding::SegmentStats stats;
  sim::StateVector state;
  std::vector<int> i_qubits;
  std::vector<int> j_qubits;
};

Encoded encode(std::span<const double> y, const DenoiseConfig& cfg) {
  cfg.validate();
  if (y.size() != cfg.length()) {
    throw DimensionError("signal length " + std::to_string(y.size()) + " != 2^(m+p) = " +
                         std::to_string(cfg.length()));
  }
  auto sig = encoding::segment_and_quantize(y, cfg.window_count(), cfg.window_size(), cfg.a, cfg.b);
  auto stats = encoding::compute_stats(sig, cfg.rule());
  if (cfg.backend == Backend::full) {
    auto state = encoding::prepare_state(sig, stats, cfg.max_qubits);
    const auto& layout = *state.layout();
    return {std::move(sig), std::move(stats), std::move(state), layout.i_qubits(),
            layout.j_qubits()};
  }
  auto state = encoding::prepare_compact_state(sig);
  std::vector<int> i_qubits(static_cast<std::size_t>(cfg.m));
  std::vector<int> j_qubits(static_cast<std::size_t>(cfg.p));
  std::iota(i_qubits.begin(), i_qubits.end(), 0);
  std::iota(j_qubits.begin(), j_qubits.end(), cfg.m);
  return {std::move(sig), std::move(stats), std::move(state), std::move(i_qubits),
          std::move(j_qubits)};
}

std::optional<noise::StochasticNoiseHook> make_hook(const DenoiseConfig& cfg) {
  return noise::quantum_hook(cfg.noise, noise::derive_seed(cfg.noise.seed, 1));
}

DenoiseResult finish(Encoded& enc, DenoiseResult result) {
  auto decoded = encoding::decode_signal(enc.state, enc.sig, enc.stats);
  result.denoised = std::move(decoded.values);
  result.amplitudes = std::move(decoded.amplitudes);
  result.clamped_samples = decoded.clamped;
  result.registers_discarded = true;
  return result;
}

// Global sample index n = j * M + i of a basis index, for the global baselines.
std::uint64_t global_index(const sim::StateVector& state, std::uint64_t idx, int m) {
  if (const auto& layout = state.layout()) {
    const auto f = layout->decompose(idx);
    return f.i | (f.j << m);
  }
  return idx;
}

// Runs transform -> projection -> inverse transform on the joint I (x) J
// register. The full backend first uncomputes Mean/Thre so windows can
// interfere, and recomputes them before decode.
template <typename Keep>
DenoiseResult run_global_baseline(Encoded& enc, const DenoiseConfig& cfg,
                                  const sim::Circuit& forward, const sim::Circuit& backward,
                                  Keep&& keep) {
  DenoiseResult result;
  auto hook = make_hook(cfg);
  sim::NoiseHook* hook_ptr = hook ? &*hook : nullptr;

  sim::Circuit setting;
  if (const auto& layout = enc.state.layout()) {
    setting = encoding::build_value_setting_circuit(enc.sig, enc.stats, *layout);
    sim::apply_circuit(enc.state, setting);
  }
  sim::apply_circuit(enc.state, forward, hook_ptr);
  const int m = cfg.m;
  const sim::StateVector& view = enc.state;
  result.marked_probability_before = 1.0;
  const double kept = sim::project_onto(enc.state, [&](std::uint64_t idx) {
    return keep(global_index(view, idx, m));
  });
  result.marked_probability_after = kept;
  sim::apply_circuit(enc.state, backward, hook_ptr);
  if (!setting.gates.empty()) sim::apply_circuit(enc.state, setting);

  result.transform_gates = forward.size() + backward.size();
  result.noise_ops_injected = hook ? hook->injected_count() : 0;
  return finish(enc, std::move(result));
}

std::vector<int> joint_qubits(const Encoded& enc) {
  auto qubits = enc.i_qubits;
  qubits.insert(qubits.end(), enc.j_qubits.begin(), enc.j_qubits.end());
  return qubits;
}

}  // namespace

IterationMode parse_iteration_mode(std::string_view text) {
  return parse_enum(text, kIterationModes, "iteration mode");
}
AmplificationMode parse_amplification_mode(std::string_view text) {
  return parse_enum(text, kAmplificationModes, "amplification mode");
}
DiffusionMode parse_diffusion_mode(std::string_view text) {
  return parse_enum(text, kDiffusionModes, "diffusion mode");
}
Backend parse_backend(std::string_view text) { return parse_enum(text, kBackends, "backend"); }
Method parse_method(std::string_view text) { return parse_enum(text, kMethods, "method"); }
QwtDepth parse_qwt_depth(std::string_view text) {
  return parse_enum(text, kQwtDepths, "qwt depth");
}
std::string_view to_string(IterationMode mode) { return name_of(mode, kIterationModes); }
std::string_view to_string(AmplificationMode mode) { return name_of(mode, kAmplificationModes); }
std::string_view to_string(DiffusionMode mode) { return name_of(mode, kDiffusionModes); }
std::string_view to_string(Backend backend) { return name_of(backend, kBackends); }
std::string_view to_string(Method method) { return name_of(method, kMethods); }
std::string_view to_string(QwtDepth depth) { return name_of(depth, kQwtDepths); }

void DenoiseConfig::validate() const {
  sim::RegisterLayout{m, a, p, b, true, backend == Backend::full ? max_qubits : 40}.validate();
  if (b < m) throw std::invalid_argument("threshold register needs b >= m");
  if (!(baseline_keep_fraction > 0.0 && baseline_keep_fraction <= 1.0)) {
    throw std::invalid_argument("baseline keep_fraction must be in (0, 1]");
  }
  if (forced_iterations && *forced_iterations < 0) {
    throw std::invalid_argument("forced iteration count must be >= 0");
  }
  if (m + p > 30) throw CapacityError("signal length 2^(m+p) exceeds 2^30");
  noise.validate();
}

encoding::ThresholdRule DenoiseConfig::rule() const {
  return threshold_rule ? *threshold_rule : encoding::ThresholdRule::default_for(m, a);
}

std::uint64_t kept_coefficients(double keep_fraction, std::uint64_t N) {
  const double raw = encoding::round_half_up(keep_fraction * static_cast<double>(N));
  return std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(raw, 1.0)), 1, N);
}

std::uint64_t qft_keep_radius(double keep_fraction, std::uint64_t N) {
  const auto count = kept_coefficients(keep_fraction, N);
  return count >= N ? N / 2 : (count - 1) / 2;
}

int qwt_levels_for(double keep_fraction, int n) {
  const int levels = static_cast<int>(std::ceil(-std::log2(keep_fraction) - 1e-9));
  return std::clamp(levels, 1, n);
}

DenoiseResult denoise_proposed(std::span<const double> y, const DenoiseConfig& cfg) {
  auto enc = encode(y, cfg);
  DenoiseResult result;
  auto hook = make_hook(cfg);
  sim::NoiseHook* hook_ptr = hook ? &*hook : nullptr;

  const auto qft = circuits::build_qft(enc.i_qubits, false);
  const auto iqft = circuits::build_qft(enc.i_qubits, true);
  sim::apply_circuit(enc.state, qft, hook_ptr);

  std::vector<std::uint64_t> taus(enc.stats.thresholds.begin(), enc.stats.thresholds.end());
  const auto predicate =
      enc.state.layout()
          ? circuits::OraclePredicate::from_layout(cfg.oracle_mode, *enc.state.layout())
          : circuits::OraclePredicate::from_table(cfg.oracle_mode, 0, cfg.m, cfg.m, cfg.p, taus);
  const auto M = cfg.window_size();
  std::uint64_t marked_total = 0;
  for (auto tau : taus) {
    result.marked_counts.push_back(circuits::marked_count(cfg.oracle_mode, tau, M));
    marked_total += result.marked_counts.back();
  }

  const double p_before = circuits::marked_probability(enc.state, predicate);
  result.marked_probability_before = p_before;
  if (cfg.amplification == AmplificationMode::exact && !cfg.forced_iterations) {
    const auto report = circuits::amplify_exact(enc.state, predicate);
    result.iterations_used = report.standard_rounds + (report.phase_matched_round ? 1 : 0);
    result.phase_matched_round = report.phase_matched_round;
  } else {
    int rounds = 0;
    if (cfg.forced_iterations) {
      rounds = *cfg.forced_iterations;
    } else if (cfg.iteration_mode == IterationMode::oracle_exact) {
      rounds = circuits::grover_iteration_count(p_before);
    } else {
      rounds = circuits::grover_iteration_count(static_cast<double>(marked_total) /
                                                static_cast<double>(cfg.length()));
    }
    if (rounds > 0) {
      const auto reference =
          cfg.diffusion == DiffusionMode::uniform
              ? circuits::uniform_reference(enc.state, enc.i_qubits.front(), cfg.m)
              : enc.state;
      circuits::amplitude_amplify(enc.state, predicate, rounds, reference);
    }
    result.iterations_used = rounds;
  }
  const double p_after = circuits::marked_probability(enc.state, predicate);
  result.marked_probability_after = p_after;
  // Marked amplitudes were scaled by sqrt(p_after / p_before); undo it so the
  // decoder sees them at their pre-amplification physical size.
  if (p_after > 0.0) enc.state.scale_norm(std::sqrt(p_before / p_after));

  sim::apply_circuit(enc.state, iqft, hook_ptr);
  result.transform_gates = qft.size() + iqft.size();
  result.noise_ops_injected = hook ? hook->injected_count() : 0;
  return finish(enc, std::move(result));
}

DenoiseResult denoise_baseline_qft(std::span<const double> y, const DenoiseConfig& cfg) {
  auto enc = encode(y, cfg);
  const auto qubits = joint_qubits(enc);
  const std::uint64_t N = cfg.length();
  const std::uint64_t radius = qft_keep_radius(cfg.baseline_keep_fraction, N);
  return run_global_baseline(enc, cfg, circuits::build_qft(qubits, false),
                             circuits::build_qft(qubits, true), [N, radius](std::uint64_t k) {
                               return std::min(k, N - k) <= radius;
                             });
}

DenoiseResult denoise_baseline_qwt(std::span<const double> y, const DenoiseConfig& cfg) {
  auto enc = encode(y, cfg);
  const auto qubits = joint_qubits(enc);
  const int n = static_cast<int>(qubits.size());
  const int levels =
      cfg.qwt_depth == QwtDepth::full ? n : qwt_levels_for(cfg.baseline_keep_fraction, n);
  const std::uint64_t count = kept_coefficients(cfg.baseline_keep_fraction, cfg.length());
  return run_global_baseline(enc, cfg, circuits::build_qwt_haar(qubits, levels, false),
                             circuits::build_qwt_haar(qubits, levels, true),
                             [count](std::uint64_t k) { return k < count; });
}

DenoiseResult denoise(Method method, std::span<const double> y, const DenoiseConfig& cfg) {
  switch (method) {
    case Method::proposed:
      return denoise_proposed(y, cfg);
    case Method::qft:
      return denoise_baseline_qft(y, cfg);
    case Method::qwt:
      return denoise_baseline_qwt(y, cfg);
    case Method::none: {
      cfg.validate();
      DenoiseResult result;
      result.denoised.assign(y.begin(), y.end());
      // No encoding takes place, so there are no amplitudes to report.
      return result;
    }
  }
  throw std::invalid_argument("unknown method");
}

NoisyRun run_with_noise(Method method, std::span<const double> clean, const DenoiseConfig& cfg) {
  NoisyRun run;
  if (cfg.noise.classical) {
    std::mt19937_64 rng(noise::derive_seed(cfg.noise.seed, 0));
    run.noisy = noise::apply_classical(clean, *cfg.noise.classical, rng);
  } else {
    run.noisy.assign(clean.begin(), clean.end());
  }
  run.result = denoise(method, run.noisy, cfg);
  return run;
}

}  // namespace qdenoise::pipeline
