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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qdenoise/circuits/oracle.hpp"
#include "qdenoise/encoding/segmented_signal.hpp"
#include "qdenoise/noise/noise.hpp"
#include "qdenoise/sim/register_layout.hpp"

namespace qdenoise::pipeline {

/// oracle_exact: r from the simulator's exact marked probability.
/// count_formula: r from sum_j M_j / (P M), as hardware would estimate it.
enum class IterationMode { oracle_exact, count_formula };

/// exact: de-randomized amplification ending fully in the marked subspace.
/// standard: r plain Grover rounds.
enum class AmplificationMode { exact, standard };

/// Reflection reference for standard amplification.
enum class DiffusionMode { prepared_state, uniform };

/// full: the whole ancilla|I|Mean|J|Thre register, dense.
/// compact: I (x) J only, with Mean/Thre carried classically per window.
enum class Backend { compact, full };

enum class Method { proposed, qft, qwt, none };

// Haar QWT baseline depth: the full pyramid over all n qubits, or only the
// levels needed to isolate the kept approximation band. Both keep the same
// coefficients and agree exactly without quantum noise.
enum class QwtDepth { full, minimal };

IterationMode parse_iteration_mode(std::string_view text);
AmplificationMode parse_amplification_mode(std::string_view text);
DiffusionMode parse_diffusion_mode(std::string_view text);
Backend parse_backend(std::string_view text);
Method parse_method(std::string_view text);
QwtDepth parse_qwt_depth(std::string_view text);
std::string_view to_string(IterationMode mode);
std::string_view to_string(AmplificationMode mode);
std::string_view to_string(DiffusionMode mode);
std::string_view to_string(Backend backend);
std::string_view to_string(Method method);
std::string_view to_string(QwtDepth depth);

struct DenoiseConfig {
  int m = 5;
  int p = 5;
  int a = 8;
  int b = 5;
  // Unset means ThresholdRule::default_for(m, a).
  std::optional<encoding::ThresholdRule> threshold_rule;
  circuits::OracleMode oracle_mode = circuits::OracleMode::symmetric;
  IterationMode iteration_mode = IterationMode::oracle_exact;
  AmplificationMode amplification = AmplificationMode::exact;
  DiffusionMode diffusion = DiffusionMode::prepared_state;
  // Overrides the computed round count (standard amplification only).
  std::optional<int> forced_iterations;
  double baseline_keep_fraction = 0.25;
  QwtDepth qwt_depth = QwtDepth::full;
  Backend backend = Backend::compact;
  int max_qubits = sim::kDefaultMaxQubits;
  noise::NoiseSpec noise;

  void validate() const;
  encoding::ThresholdRule rule() const;
  std::uint64_t window_size() const { return std::uint64_t{1} << m; }
  std::uint64_t window_count() const { return std::uint64_t{1} << p; }
  std::uint64_t length() const { return window_size() * window_count(); }
};

struct DenoiseResult {
  std::vector<double> denoised;
  std::vector<double> amplitudes;  // decoded real amplitudes c_ji before clamping
  std::vector<std::uint64_t> marked_counts;  // M_j per window (proposed only)
  int iterations_used = 0;
  bool phase_matched_round = false;
  double marked_probability_before = 1.0;
  double marked_probability_after = 1.0;
  bool registers_discarded = false;
  std::size_t clamped_samples = 0;
  std::size_t transform_gates = 0;
  std::uint64_t noise_ops_injected = 0;
};

/// Segment-wise QFT, threshold oracle with amplitude amplification, IQFT.
DenoiseResult denoise_proposed(std::span<const double> y, const DenoiseConfig& cfg);

/// Global QFT over all log2(N) qubits, keep the symmetric low band holding
/// about keep_fraction * N frequencies (projection), IQFT.
DenoiseResult denoise_baseline_qft(std::span<const double> y, const DenoiseConfig& cfg);

/// Global Haar QWT with ceil(log2(1/keep_fraction)) levels, keep the first
/// keep_fraction * N subband coefficients (projection), inverse QWT.
DenoiseResult denoise_baseline_qwt(std::span<const double> y, const DenoiseConfig& cfg);

DenoiseResult denoise(Method method, std::span<const double> y, const DenoiseConfig& cfg);

/// Classical noise from cfg.noise on the clean signal, then the denoiser with
/// the quantum hooks. Returns the noisy input alongside the result.
struct NoisyRun {
  std::vector<double> noisy;
  DenoiseResult result;
};
NoisyRun run_with_noise(Method method, std::span<const double> clean, const DenoiseConfig& cfg);

/// Number of symmetric low frequencies (min(k, N-k) <= K) kept for
/// `keep_fraction` of N, at least one.
std::uint64_t qft_keep_radius(double keep_fraction, std::uint64_t N);
int qwt_levels_for(double keep_fraction, int n);
std::uint64_t kept_coefficients(double keep_fraction, std::uint64_t N);

}  // namespace qdenoise::pipeline
