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
#include <functional>
#include <random>
#include <vector>

#include "qdenoise/encoding/segmented_signal.hpp"
#include "qdenoise/sim/circuit.hpp"
#include "qdenoise/sim/register_layout.hpp"
#include "qdenoise/sim/state_vector.hpp"

namespace qdenoise::encoding {

/// Pipeline register layout for a segmented signal (ancilla included).
sim::RegisterLayout layout_for(const SegmentedSignal& sig,
                               int max_qubits = sim::kDefaultMaxQubits);

/// Encoding angle theta = pi * s / 2^a.
double encoding_angle(double code, int a);

/// Per window j, the controlled value setting of Mean to A_j and Thre to
/// tau_j, controlled on J = j. Self-inverse: applying it again resets both
/// registers to |0>.
sim::Circuit build_value_setting_circuit(const SegmentedSignal& sig, const SegmentStats& stats,
                                         const sim::RegisterLayout& layout);

/// Hadamards on I and J followed by the encoding unitary: per window j a
/// controlled value setting of Mean to A_j and Thre to tau_j (controls: J),
/// and per sample a controlled Ry(2 theta_ji) on the ancilla (controls: I, J).
sim::Circuit build_encoding_circuit(const SegmentedSignal& sig, const SegmentStats& stats,
                                    const sim::RegisterLayout& layout);

/// Runs the encoding circuit from |0...0> and keeps the ancilla-0 branch, so
/// amplitudes are proportional to cos(theta_ji) on |i>|A_j>|j>|tau_j>.
sim::StateVector prepare_state(const SegmentedSignal& sig, const SegmentStats& stats,
                               int max_qubits = sim::kDefaultMaxQubits);

/// The same state restricted to I (qubits 0..m-1) and J (qubits m..m+p-1),
/// the registers that remain in superposition after preparation. Mean and
/// Thre are fixed by J and are carried classically in SegmentStats.
sim::StateVector prepare_compact_state(const SegmentedSignal& sig);

/// Basis index holding sample (i, j): the (A_j, tau_j) slot with ancilla 0
/// for full-register states, j*M + i for compact states.
std::uint64_t sample_index(const sim::StateVector& state, const SegmentedSignal& sig,
                           const SegmentStats& stats, std::uint64_t i, std::uint64_t j);

inline constexpr double kUnitSnap = 1e-13;

struct DecodeOptions {
  // Rotate away the unobservable global phase before reading real parts.
  bool align_global_phase = true;
  // Magnitudes above (1 + tolerance) * kappa are counted as clamped.
  double clamp_tolerance = 0.01;
};

struct DecodedSignal {
  std::vector<double> values;  // original scale
  std::vector<double> codes;   // fractional codes in [0, 2^a]
  std::vector<double> amplitudes;  // c_ji before clamping
  std::size_t clamped = 0;
  double phase_correction = 0.0;
};

/// Projects onto the (A_j, tau_j) slots and inverts the encoding:
/// c = Re(amp) * norm_scale * sqrt(PM), s = (2^a / pi) acos(clamp(c, -1, 1)),
/// then maps codes back through the quantization affine map. acos loses half
/// the significant digits next to |c| = 1, so |c| within kUnitSnap of 1 is
/// read as exactly 1; genuine code levels are at least 1 - cos(pi / 2^a)
/// away from it.
DecodedSignal decode_signal(const sim::StateVector& state, const SegmentedSignal& sig,
                            const SegmentStats& stats, const DecodeOptions& options = {});

/// Produces one fresh copy of a prepared input state per call.
using StateSource = std::function<sim::StateVector()>;

struct SamplingGeometry {
  int m = 1;
  int p = 0;
  int a = 2;
};

/// Estimates window means from measurements of J and I alone.
///
/// The source is invoked once per window (P preparations); each preparation
/// is sampled `shots_per_segment` times. Conditional frequencies are mapped
/// back through the amplitude encoding using the state's norm_scale:
/// c_ji = sqrt(freq_ji * PM) * norm_scale. Estimates are rounded to codes and
/// thresholds come from `rule`. Throws EstimationError when shots are zero or
/// a window receives no samples.
SegmentStats estimate_means_by_sampling(const StateSource& source, std::uint64_t shots_per_segment,
                                        std::mt19937_64& rng, const SamplingGeometry& geometry,
                                        const ThresholdRule& rule);

}  // namespace qdenoise::encoding
