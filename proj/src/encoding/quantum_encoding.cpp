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

#include "qdenoise/encoding/quantum_encoding.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::encoding {

sim::RegisterLayout layout_for(const SegmentedSignal& sig, int max_qubits) {
  sim::RegisterLayout layout{sig.m, sig.a, sig.p, sig.b, true, max_qubits};
  layout.validate();
  return layout;
}

double encoding_angle(double code, int a) {
  return std::numbers::pi * code / static_cast<double>(std::uint64_t{1} << a);
}

sim::Circuit build_value_setting_circuit(const SegmentedSignal& sig, const SegmentStats& stats,
                                         const sim::RegisterLayout& layout) {
  const auto P = sig.window_count();
  if (stats.means.size() != P || stats.thresholds.size() != P) {
    throw DimensionError("segment stats do not match the signal's window count");
  }
  const auto j_qubits = layout.j_qubits();
  auto targets = layout.mean_qubits();
  const auto thre = layout.thre_qubits();
  targets.insert(targets.end(), thre.begin(), thre.end());
  sim::Circuit circuit;
  circuit.label = "set-mean-threshold";
  for (std::uint64_t j = 0; j < P; ++j) {
    const auto pattern = static_cast<std::uint64_t>(stats.means[j]) |
                         (static_cast<std::uint64_t>(stats.thresholds[j]) << sig.a);
    circuit.gates.push_back({sim::MultiControlledSet{j_qubits, j, targets, pattern}});
  }
  return circuit;
}

sim::Circuit build_encoding_circuit(const SegmentedSignal& sig, const SegmentStats& stats,
                                    const sim::RegisterLayout& layout) {
  const auto P = sig.window_count();
  const auto M = sig.window_size();
  if (stats.means.size() != P || stats.thresholds.size() != P) {
    throw DimensionError("segment stats do not match the signal's window count");
  }
  sim::Circuit circuit;
  circuit.label = "encode";
  for (int q : layout.i_qubits()) circuit.gates.push_back({sim::Hadamard{q}});
  for (int q : layout.j_qubits()) circuit.gates.push_back({sim::Hadamard{q}});

  circuit.append(build_value_setting_circuit(sig, stats, layout));

  auto ry_controls = layout.i_qubits();
  const auto j_qubits = layout.j_qubits();
  ry_controls.insert(ry_controls.end(), j_qubits.begin(), j_qubits.end());
  for (std::uint64_t j = 0; j < P; ++j) {
    const auto seg = sig.segment(j);
    for (std::uint64_t i = 0; i < M; ++i) {
      const double theta = encoding_angle(seg[i], sig.a);
      if (theta == 0.0) continue;
      circuit.gates.push_back(
          {sim::MultiControlledRy{ry_controls, i | (j << sig.m), layout.ancilla_qubit(),
                                  2.0 * theta}});
    }
  }
  return circuit;
}

sim::StateVector prepare_state(const SegmentedSignal& sig, const SegmentStats& stats,
                               int max_qubits) {
  const auto layout = layout_for(sig, max_qubits);
  auto state = sim::new_zero_state(layout);
  sim::apply_circuit(state, build_encoding_circuit(sig, stats, layout));
  sim::measure_qubit(state, layout.ancilla_qubit(), 0);
  return state;
}

sim::StateVector prepare_compact_state(const SegmentedSignal& sig) {
  const auto N = sig.length();
  std::vector<sim::Complex> amps(N);
  double sum_sq = 0.0;
  for (std::uint64_t k = 0; k < N; ++k) {
    const double c = std::cos(encoding_angle(sig.quantized[k], sig.a));
    amps[k] = c;
    sum_sq += c * c;
  }
  if (!(sum_sq > 0.0)) throw MeasurementError("ancilla branch 0 has zero probability");
  const double inv = 1.0 / std::sqrt(sum_sq);
  for (auto& amp : amps) amp *= inv;
  // Same bookkeeping as the forced ancilla measurement: branch probability
  // sum cos^2 / (PM).
  const double branch = sum_sq / static_cast<double>(N);
  return sim::StateVector::from_amplitudes(std::move(amps), std::sqrt(branch));
}

std::uint64_t sample_index(const sim::StateVector& state, const SegmentedSignal& sig,
                           const SegmentStats& stats, std::uint64_t i, std::uint64_t j) {
  if (const auto& layout = state.layout()) {
    return layout->compose({0, i, static_cast<std::uint64_t>(stats.means[j]), j,
                            static_cast<std::uint64_t>(stats.thresholds[j])});
  }
  return j * sig.window_size() + i;
}

DecodedSignal decode_signal(const sim::StateVector& state, const SegmentedSignal& sig,
                            const SegmentStats& stats, const DecodeOptions& options) {
  const auto P = sig.window_count();
  const auto M = sig.window_size();
  const auto N = sig.length();
  if (state.layout()) {
    const auto& layout = *state.layout();
    if (layout.m != sig.m || layout.p != sig.p || layout.a != sig.a || layout.b != sig.b) {
      throw DimensionError("state layout does not match the segmented signal");
    }
  } else if (state.size() != N) {
    throw DimensionError("compact state has " + std::to_string(state.size()) +
                         " amplitudes, signal has " + std::to_string(N) + " samples");
  }

  std::vector<sim::Complex> slots(N);
  sim::Complex total{};
  for (std::uint64_t j = 0; j < P; ++j) {
    for (std::uint64_t i = 0; i < M; ++i) {
      slots[j * M + i] = state[sample_index(state, sig, stats, i, j)];
      total += slots[j * M + i];
    }
  }

  DecodedSignal out;
  sim::Complex rotate{1.0};
  if (options.align_global_phase && std::abs(total) > 1e-12) {
    out.phase_correction = -std::arg(total);
    rotate = std::polar(1.0, out.phase_correction);
  }
  const double gain = state.norm_scale() * std::sqrt(static_cast<double>(N));
  const double top = static_cast<double>(std::uint64_t{1} << sig.a) / std::numbers::pi;
  out.values.resize(N);
  out.codes.resize(N);
  out.amplitudes.resize(N);
  for (std::uint64_t k = 0; k < N; ++k) {
    if (std::abs(slots[k]) * gain > 1.0 + options.clamp_tolerance) ++out.clamped;
    const double raw = (rotate * slots[k]).real() * gain;
    out.amplitudes[k] = raw;
    double c = std::clamp(raw, -1.0, 1.0);
    if (1.0 - std::abs(c) < kUnitSnap) c = std::copysign(1.0, c);
    out.codes[k] = top * std::acos(c);
    out.values[k] = sig.scale.to_value(out.codes[k]);
  }
  return out;
}

SegmentStats estimate_means_by_sampling(const StateSource& source, std::uint64_t shots_per_segment,
                                        std::mt19937_64& rng, const SamplingGeometry& geometry,
                                        const ThresholdRule& rule) {
  if (shots_per_segment == 0) throw EstimationError("mean estimation needs at least one shot");
  const std::uint64_t M = std::uint64_t{1} << geometry.m;
  const std::uint64_t P = std::uint64_t{1} << geometry.p;
  const std::uint64_t N = M * P;

  std::vector<std::uint64_t> counts(N, 0);
  double norm_scale = 1.0;
  for (std::uint64_t prep = 0; prep < P; ++prep) {
    const sim::StateVector state = source();
    norm_scale = state.norm_scale();
    const auto amps = state.amplitudes();
    std::vector<double> weights(amps.size());
    std::transform(amps.begin(), amps.end(), weights.begin(),
                   [](const sim::Complex& c) { return std::norm(c); });
    std::discrete_distribution<std::uint64_t> draw(weights.begin(), weights.end());
    for (std::uint64_t shot = 0; shot < shots_per_segment; ++shot) {
      const std::uint64_t idx = draw(rng);
      std::uint64_t i = 0;
      std::uint64_t j = 0;
      if (const auto& layout = state.layout()) {
        const auto fields = layout->decompose(idx);
        i = fields.i;
        j = fields.j;
      } else {
        i = idx & (M - 1);
        j = idx >> geometry.m;
      }
      ++counts[j * M + i];
    }
  }

  const double total_shots = static_cast<double>(shots_per_segment * P);
  const double top = static_cast<double>(std::uint64_t{1} << geometry.a) / std::numbers::pi;
  SegmentStats stats;
  stats.means.resize(P);
  stats.thresholds.resize(P);
  for (std::uint64_t j = 0; j < P; ++j) {
    std::uint64_t seen = 0;
    double code_sum = 0.0;
    for (std::uint64_t i = 0; i < M; ++i) {
      const std::uint64_t n = counts[j * M + i];
      seen += n;
      const double c = std::sqrt(static_cast<double>(n) / total_shots * static_cast<double>(N)) *
                       norm_scale;
      code_sum += top * std::acos(std::clamp(c, -1.0, 1.0));
    }
    if (seen == 0) {
      throw EstimationError("segment " + std::to_string(j) + " received no samples");
    }
    const int max_code = 1 << (geometry.a - 1);
    stats.means[j] = std::clamp(
        static_cast<int>(round_half_up(code_sum / static_cast<double>(M))), 0, max_code);
    stats.thresholds[j] = rule(stats.means[j], M);
  }
  return stats;
}

}  // namespace qdenoise::encoding
