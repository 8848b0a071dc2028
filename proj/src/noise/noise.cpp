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

#include "qdenoise/noise/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::noise {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void NoiseSpec::validate() const {
  if (classical) {
    if (const auto* awgn = std::get_if<Awgn>(&*classical)) {
      if (!std::isfinite(awgn->snr_db)) throw DomainError("awgn snr_db must be finite");
    } else if (const auto* poisson = std::get_if<Poisson>(&*classical)) {
      if (!(poisson->peak_level > 0.0)) throw DomainError("poisson peak_level must be > 0");
    }
  }
  if (phase_epsilon && !(*phase_epsilon >= 0.0 && std::isfinite(*phase_epsilon))) {
    throw DomainError("phase noise epsilon must be finite and >= 0");
  }
  if (bit_flip && !(*bit_flip >= 0.0 && *bit_flip <= 1.0)) {
    throw DomainError("bit-flip probability must be in [0, 1]");
  }
}

std::string NoiseSpec::describe() const {
  std::ostringstream out;
  bool any = false;
  if (classical) {
    if (const auto* awgn = std::get_if<Awgn>(&*classical)) {
      out << "awgn(" << awgn->snr_db << " dB)";
    } else {
      out << "poisson(peak " << std::get<Poisson>(*classical).peak_level << ")";
    }
    any = true;
  }
  if (phase_epsilon) {
    out << (any ? " + " : "") << "phase(eps " << *phase_epsilon << ")";
    any = true;
  }
  if (bit_flip) {
    out << (any ? " + " : "") << "bitflip(p " << *bit_flip << ")";
    any = true;
  }
  return any ? out.str() : "none";
}

std::vector<double> add_awgn(std::span<const double> y, double snr_db, std::mt19937_64& rng) {
  if (!std::isfinite(snr_db)) throw DomainError("awgn snr_db must be finite");
  const double power =
      std::inner_product(y.begin(), y.end(), y.begin(), 0.0) / static_cast<double>(y.size());
  if (!(power > 0.0)) throw DomainError("awgn needs a signal with nonzero power");
  const double sigma = std::sqrt(power / std::pow(10.0, snr_db / 10.0));
  std::normal_distribution<double> gauss(0.0, sigma);
  std::vector<double> out(y.begin(), y.end());
  for (double& v : out) v += gauss(rng);
  return out;
}

std::vector<double> add_poisson(std::span<const double> y, double peak_level,
                                std::mt19937_64& rng) {
  if (!(peak_level > 0.0) || !std::isfinite(peak_level)) {
    throw DomainError("poisson peak_level must be positive and finite");
  }
  std::vector<double> out(y.begin(), y.end());
  if (y.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
  const double offset = std::min(0.0, *lo_it);
  const double span = *hi_it - offset;
  if (!(span > 0.0)) return out;
  const double scale = peak_level / span;
  for (double& v : out) {
    const double lambda = (v - offset) * scale;
    double count = 0.0;
    if (lambda > 0.0) count = static_cast<double>(std::poisson_distribution<long long>(lambda)(rng));
    v = count / scale + offset;
  }
  return out;
}

std::vector<double> apply_classical(std::span<const double> y, const ClassicalNoise& noise,
                                    std::mt19937_64& rng) {
  if (const auto* awgn = std::get_if<Awgn>(&noise)) return add_awgn(y, awgn->snr_db, rng);
  return add_poisson(y, std::get<Poisson>(noise).peak_level, rng);
}

void StochasticNoiseHook::absorb(const StochasticNoiseHook& other) {
  rules_.insert(rules_.end(), other.rules_.begin(), other.rules_.end());
}

void StochasticNoiseHook::inject(const sim::GateOp& applied, std::vector<sim::GateOp>& extra) {
  for (const auto& rule : rules_) {
    if (!rule.matches(applied)) continue;
    if (auto gate = rule.sample(applied, rng_)) {
      extra.push_back(std::move(*gate));
      ++injected_;
    }
  }
}

StochasticNoiseHook phase_noise_hook(double epsilon, std::uint64_t seed, PhaseNoiseMode mode) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("phase noise epsilon must be finite and >= 0");
  }
  StochasticNoiseHook hook(seed);
  hook.add_rule({
      [](const sim::GateOp&) { return true; },
      [epsilon, mode](const sim::GateOp& gate,
                      std::mt19937_64& rng) -> std::optional<sim::GateOp> {
        if (epsilon == 0.0) return std::nullopt;
        const double delta = std::uniform_real_distribution<double>(-epsilon, epsilon)(rng);
        if (mode == PhaseNoiseMode::perturb_angle) {
          if (const auto* cp = std::get_if<sim::ControlledPhase>(&gate.kind)) {
            return sim::GateOp{sim::ControlledPhase{cp->control, cp->target, delta}};
          }
        }
        return sim::GateOp{sim::Rz{sim::primary_target(gate), delta}};
      },
  });
  return hook;
}

StochasticNoiseHook bit_flip_hook(double p_flip, std::uint64_t seed) {
  if (!(p_flip >= 0.0 && p_flip <= 1.0)) throw DomainError("bit-flip probability must be in [0, 1]");
  StochasticNoiseHook hook(seed);
  hook.add_rule({
      [](const sim::GateOp& gate) { return sim::is_hadamard(gate); },
      [p_flip](const sim::GateOp& gate, std::mt19937_64& rng) -> std::optional<sim::GateOp> {
        if (p_flip == 0.0) return std::nullopt;
        if (!std::bernoulli_distribution(p_flip)(rng)) return std::nullopt;
        return sim::GateOp{sim::PauliX{sim::primary_target(gate)}};
      },
  });
  return hook;
}

std::optional<StochasticNoiseHook> quantum_hook(const NoiseSpec& spec, std::uint64_t seed) {
  if (!spec.has_quantum()) return std::nullopt;
  StochasticNoiseHook hook(seed);
  if (spec.phase_epsilon) hook.absorb(phase_noise_hook(*spec.phase_epsilon, seed, spec.phase_mode));
  if (spec.bit_flip) hook.absorb(bit_flip_hook(*spec.bit_flip, seed));
  return hook;
}

}  // namespace qdenoise::noise
