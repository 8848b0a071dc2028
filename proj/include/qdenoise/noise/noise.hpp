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
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qdenoise/sim/circuit.hpp"

namespace qdenoise::noise {

/// SplitMix64 mix of (base, stream): independent, reproducible sub-seeds for
/// per-trial and per-purpose random streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct Awgn {
  double snr_db = 15.0;
};

struct Poisson {
  double peak_level = 30.0;
};

using ClassicalNoise = std::variant<Awgn, Poisson>;

enum class PhaseNoiseMode {
  post_rotation,  // Rz(delta) on the gate's target after every tagged gate
  perturb_angle,  // controlled phases get an extra CPHASE(delta); others as post_rotation
};

/// Which noise processes act in one scenario. Classical noise hits the
/// signal before encoding; the quantum parts ride on transform circuits.
struct NoiseSpec {
  std::optional<ClassicalNoise> classical;
  std::optional<double> phase_epsilon;
  std::optional<double> bit_flip;
  PhaseNoiseMode phase_mode = PhaseNoiseMode::post_rotation;
  std::uint64_t seed = 0;

  void validate() const;
  bool has_quantum() const { return phase_epsilon.has_value() || bit_flip.has_value(); }
  std::string describe() const;
};

/// y + n, n ~ N(0, mean(y^2) / 10^(snr_db/10)). Throws DomainError for a
/// zero-power signal or non-finite snr.
std::vector<double> add_awgn(std::span<const double> y, double snr_db, std::mt19937_64& rng);

/// Scales y (shifted to be nonnegative when it has negative samples) so its
/// maximum is `peak_level`, draws Poisson counts, and maps them back.
std::vector<double> add_poisson(std::span<const double> y, double peak_level,
                                std::mt19937_64& rng);

std::vector<double> apply_classical(std::span<const double> y, const ClassicalNoise& noise,
                                    std::mt19937_64& rng);

/// Noise hook built from (matcher -> sampler) rules sharing one random stream.
/// Rules are evaluated in order after each tagged gate.
class StochasticNoiseHook final : public sim::NoiseHook {
 public:
  using Matcher = std::function<bool(const sim::GateOp&)>;
  using Sampler =
      std::function<std::optional<sim::GateOp>(const sim::GateOp&, std::mt19937_64&)>;

  struct Rule {
    Matcher matches;
    Sampler sample;
  };

  explicit StochasticNoiseHook(std::uint64_t seed) : rng_(seed) {}

  void add_rule(Rule rule) { rules_.push_back(std::move(rule)); }
  void absorb(const StochasticNoiseHook& other);

  void inject(const sim::GateOp& applied, std::vector<sim::GateOp>& extra) override;

  std::uint64_t injected_count() const { return injected_; }
  std::size_t rule_count() const { return rules_.size(); }

 private:
  std::vector<Rule> rules_;
  std::mt19937_64 rng_;
  std::uint64_t injected_ = 0;
};

/// After every tagged gate, a z-rotation of its target by delta ~ U(-eps, eps).
StochasticNoiseHook phase_noise_hook(double epsilon, std::uint64_t seed,
                                     PhaseNoiseMode mode = PhaseNoiseMode::post_rotation);

/// After every tagged Hadamard, PauliX on the same qubit with probability p.
StochasticNoiseHook bit_flip_hook(double p_flip, std::uint64_t seed);

/// Combined hook for the quantum parts of `spec` (phase rule first), or
/// nullopt when it has no quantum noise.
std::optional<StochasticNoiseHook> quantum_hook(const NoiseSpec& spec, std::uint64_t seed);

}  // namespace qdenoise::noise
