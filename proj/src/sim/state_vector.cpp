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

#include "qdenoise/sim/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::sim {
namespace {

constexpr int kMaxGenericQubits = 30;
thread_local std::uint64_t g_touches = 0;

}  // namespace

namespace detail {
void add_amplitude_touches(std::uint64_t count) { g_touches += count; }
void throw_zero_projection() {
  throw MeasurementError("projection onto a zero-probability subspace");
}
}  // namespace detail

std::uint64_t amplitude_touch_count() { return g_touches; }
void reset_amplitude_touch_count() { g_touches = 0; }

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxGenericQubits) {
    throw CapacityError("state vector with " + std::to_string(num_qubits) +
                        " qubits exceeds the limit of " + std::to_string(kMaxGenericQubits));
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(const RegisterLayout& layout) {
  layout.validate();
  num_qubits_ = layout.total_qubits();
  layout_ = layout;
  amplitudes_.assign(static_cast<std::size_t>(layout.dimension()), Complex{});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes, int num_qubits)
    : amplitudes_(std::move(amplitudes)), num_qubits_(num_qubits) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes, double norm_scale) {
  const std::size_t n = amplitudes.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw DimensionError("amplitude count " + std::to_string(n) + " is not a power of two");
  }
  int q = 0;
  while ((std::size_t{1} << q) < n) ++q;
  if (q > kMaxGenericQubits) throw CapacityError("amplitude vector too large");
  StateVector state(std::move(amplitudes), q);
  const double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-10) {
    throw DomainError("amplitudes are not unit norm (norm " + std::to_string(nrm) + ")");
  }
  state.set_norm_scale(norm_scale);
  return state;
}

void StateVector::set_norm_scale(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("norm_scale must be positive and finite");
  }
  norm_scale_ = value;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& amp : amplitudes_) sum += std::norm(amp);
  return std::sqrt(sum);
}

double StateVector::renormalize() {
  const double nrm = norm();
  if (nrm > 0.0) {
    const double inv = 1.0 / nrm;
    for (auto& amp : amplitudes_) amp *= inv;
  }
  return nrm;
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw IndexError("qubit index " + std::to_string(qubit) + " out of range for " +
                     std::to_string(num_qubits_) + "-qubit state");
  }
}

StateVector new_zero_state(const RegisterLayout& layout) { return StateVector(layout); }

Complex inner_product(const StateVector& lhs, const StateVector& rhs) {
  if (lhs.size() != rhs.size()) throw DimensionError("inner product of mismatched states");
  Complex acc{};
  const auto a = lhs.amplitudes();
  const auto b = rhs.amplitudes();
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

void reflect_about(StateVector& state, const StateVector& reference, double phase) {
  if (state.size() != reference.size()) {
    throw DimensionError("reflection reference has " + std::to_string(reference.size()) +
                         " amplitudes, state has " + std::to_string(state.size()));
  }
  const Complex overlap = inner_product(reference, state);
  const Complex coeff = phase == std::numbers::pi
                            ? 2.0 * overlap
                            : (Complex{1.0} - std::polar(1.0, phase)) * overlap;
  auto amps = state.amplitudes();
  const auto ref = reference.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) amps[k] = coeff * ref[k] - amps[k];
  detail::add_amplitude_touches(amps.size());
}

double probability_of_one(const StateVector& state, int qubit) {
  state.check_qubit(qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const auto amps = state.amplitudes();
  double p1 = 0.0;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & bit) p1 += std::norm(amps[idx]);
  }
  return p1;
}

MeasurementResult measure_qubit(StateVector& state, int qubit,
                                std::optional<int> forced_outcome, std::mt19937_64* rng) {
  state.check_qubit(qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  auto amps = state.amplitudes();
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    (idx & bit ? p1 : p0) += std::norm(amps[idx]);
  }
  const double total = p0 + p1;
  p0 /= total;
  p1 /= total;

  int outcome = 0;
  if (forced_outcome) {
    if (*forced_outcome != 0 && *forced_outcome != 1) {
      throw DomainError("forced outcome must be 0 or 1");
    }
    outcome = *forced_outcome;
  } else {
    if (rng == nullptr) throw DomainError("unforced measurement requires an rng");
    outcome = std::uniform_real_distribution<double>(0.0, 1.0)(*rng) < p1 ? 1 : 0;
  }
  const double prob = outcome == 1 ? p1 : p0;
  if (!(prob > 0.0)) {
    throw MeasurementError("outcome " + std::to_string(outcome) + " on qubit " +
                           std::to_string(qubit) + " has zero probability");
  }
  const double inv = 1.0 / std::sqrt(prob * total);
  const std::uint64_t keep = outcome == 1 ? bit : 0;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    amps[idx] = (idx & bit) == keep ? amps[idx] * inv : Complex{};
  }
  state.scale_norm(std::sqrt(prob));
  return {outcome, prob};
}

}  // namespace qdenoise::sim
