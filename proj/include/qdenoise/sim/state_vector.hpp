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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "qdenoise/sim/register_layout.hpp"

namespace qdenoise::sim {

using Complex = std::complex<double>;

/// Dense pure state over 2^q basis states.
///
/// Amplitudes are kept at unit L2 norm. `norm_scale` is the classical factor
/// relating them to the physical amplitudes before any post-selection:
/// physical = norm_scale * amplitude. Measurements and projections multiply
/// it by sqrt(branch probability).
class StateVector {
 public:
  // |0...0> over a generic register of `num_qubits` qubits.
  explicit StateVector(int num_qubits);
  // |0...0> over a validated pipeline layout.
  explicit StateVector(const RegisterLayout& layout);

  // Takes ownership of unit-norm amplitudes (checked within 1e-10).
  static StateVector from_amplitudes(std::vector<Complex> amplitudes,
                                     double norm_scale = 1.0);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t size() const { return amplitudes_.size(); }
  const std::optional<RegisterLayout>& layout() const { return layout_; }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex operator[](std::uint64_t index) const { return amplitudes_[index]; }

  double norm_scale() const { return norm_scale_; }
  void set_norm_scale(double value);
  void scale_norm(double factor) { set_norm_scale(norm_scale_ * factor); }

  double norm() const;
  // Rescales amplitudes to unit norm; returns the previous norm.
  double renormalize();

  void check_qubit(int qubit) const;

 private:
  StateVector(std::vector<Complex> amplitudes, int num_qubits);

  std::vector<Complex> amplitudes_;
  int num_qubits_ = 0;
  std::optional<RegisterLayout> layout_;
  double norm_scale_ = 1.0;
};

StateVector new_zero_state(const RegisterLayout& layout);

/// <lhs|rhs>
Complex inner_product(const StateVector& lhs, const StateVector& rhs);

/// state <- -state + (1 - e^{i phase}) <ref|state> ref.
///
/// With phase = pi this is the reflection (2|ref><ref| - I). Other phases give
/// the generalized reflection used by phase-matched amplification. Rank-one
/// update, O(2^q).
void reflect_about(StateVector& state, const StateVector& reference,
                   double phase = std::numbers::pi);

struct MeasurementResult {
  int outcome = 0;
  double probability = 0.0;
};

/// Measures one qubit. With `forced_outcome` the branch is selected without
/// sampling; otherwise `rng` must be provided. The surviving branch is
/// renormalized and norm_scale picks up sqrt(probability).
MeasurementResult measure_qubit(StateVector& state, int qubit,
                                std::optional<int> forced_outcome,
                                std::mt19937_64* rng = nullptr);

/// Probability of outcome 1 on `qubit`.
double probability_of_one(const StateVector& state, int qubit);

/// Keeps only basis states for which `keep(index)` holds, renormalizes, and
/// multiplies norm_scale by sqrt(kept probability). Returns that probability.
template <typename Predicate>
double project_onto(StateVector& state, Predicate&& keep);

// Number of amplitudes read-modify-written by gate kernels on this thread.
std::uint64_t amplitude_touch_count();
void reset_amplitude_touch_count();

namespace detail {
void add_amplitude_touches(std::uint64_t count);
[[noreturn]] void throw_zero_projection();
}  // namespace detail

template <typename Predicate>
double project_onto(StateVector& state, Predicate&& keep) {
  auto amps = state.amplitudes();
  double kept = 0.0;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (keep(idx)) {
      kept += std::norm(amps[idx]);
    } else {
      amps[idx] = Complex{};
    }
  }
  if (!(kept > 0.0)) detail::throw_zero_projection();
  state.renormalize();
  state.scale_norm(std::sqrt(kept));
  return kept;
}

}  // namespace qdenoise::sim
