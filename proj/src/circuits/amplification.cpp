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

#include "qdenoise/circuits/amplification.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::circuits {

int grover_iteration_count(double marked_probability) {
  if (!(marked_probability > 0.0) || marked_probability > 1.0) {
    throw DomainError("marked probability " + std::to_string(marked_probability) +
                      " outside (0, 1]");
  }
  const double theta = std::asin(std::sqrt(marked_probability));
  const double ideal = std::numbers::pi / (4.0 * theta) - 0.5;
  // Half-way cases (p = 1/2 gives exactly 1/2) round up; asin leaves them a
  // few ulps short.
  const double rounded = std::floor(ideal + 0.5 + 1e-12);
  return rounded > 0.0 ? static_cast<int>(rounded) : 0;
}

void amplitude_amplify(sim::StateVector& state, const OraclePredicate& predicate, int iterations,
                       const sim::StateVector& reference) {
  if (iterations < 0) throw DomainError("iteration count must be >= 0");
  for (int r = 0; r < iterations; ++r) {
    apply_oracle(state, predicate);
    sim::reflect_about(state, reference);
  }
}

void amplitude_amplify(sim::StateVector& state, const OraclePredicate& predicate, int iterations) {
  if (iterations == 0) return;
  const sim::StateVector reference = state;
  amplitude_amplify(state, predicate, iterations, reference);
}

sim::StateVector uniform_reference(const sim::StateVector& state, int offset, int width) {
  const std::uint64_t mask = ((std::uint64_t{1} << width) - 1) << offset;
  const auto amps = state.amplitudes();
  std::vector<sim::Complex> ref(amps.size());
  // Marginal weight of each configuration of the other registers.
  std::vector<double> weight(amps.size(), 0.0);
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) weight[idx & ~mask] += std::norm(amps[idx]);
  const double inv = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << width));
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    ref[idx] = std::sqrt(weight[idx & ~mask]) * inv;
  }
  auto out = sim::StateVector::from_amplitudes(std::move(ref));
  return out;
}

namespace {

// Residual of |w - 1| = 1 where w = y / (s cos theta) makes the unmarked
// coefficient vanish; see amplify_exact.
double phase_residual(double phi, double theta, double x, double y) {
  const std::complex<double> s =
      std::sin(theta) * x * std::polar(1.0, phi) + std::cos(theta) * y;
  const std::complex<double> w = y / (s * std::cos(theta));
  return std::norm(w - 1.0) - 1.0;
}

}  // namespace

AmplificationReport amplify_exact(sim::StateVector& state, const OraclePredicate& predicate) {
  AmplificationReport report;
  const double p0 = marked_probability(state, predicate);
  report.probability_before = p0;
  if (!(p0 > 0.0)) throw DomainError("exact amplification needs a nonempty marked subspace");
  if (p0 >= 1.0 - 1e-15) {
    report.probability_after = p0;
    return report;
  }

  const sim::StateVector reference = state;
  const double theta = std::asin(std::sqrt(p0));
  const int rounds = static_cast<int>(std::floor(std::numbers::pi / (4.0 * theta) - 0.5));
  report.standard_rounds = rounds > 0 ? rounds : 0;
  amplitude_amplify(state, predicate, report.standard_rounds, reference);

  // In the plane of the normalized marked part g and unmarked part u of the
  // reference, the state is x g + y u with x = sin(alpha), y = cos(alpha).
  // A final round S_chi(phi) then -I + (1 - e^{i varphi}) |ref><ref| leaves
  // unmarked coefficient -y + (1 - e^{i varphi}) s cos(theta), with
  // s = <ref|S_chi(phi) state>. Choose phi so that w = y / (s cos theta)
  // satisfies |w - 1| = 1, then e^{i varphi} = 1 - w.
  const double alpha = (2.0 * report.standard_rounds + 1.0) * theta;
  const double x = std::sin(alpha);
  const double y = std::cos(alpha);
  if (std::abs(y) > 1e-13) {
    double lo = 0.0;
    double hi = std::numbers::pi;
    if (phase_residual(lo, theta, x, y) > 0.0 || phase_residual(hi, theta, x, y) < 0.0) {
      throw DomainError("phase-matched amplification has no bracketed root");
    }
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (phase_residual(mid, theta, x, y) < 0.0 ? lo : hi) = mid;
    }
    const double phi = 0.5 * (lo + hi);
    const std::complex<double> s =
        std::sin(theta) * x * std::polar(1.0, phi) + std::cos(theta) * y;
    const std::complex<double> w = y / (s * std::cos(theta));
    report.oracle_phase = phi;
    report.reflection_phase = std::arg(1.0 - w);
    report.phase_matched_round = true;
    apply_oracle(state, predicate, report.oracle_phase);
    sim::reflect_about(state, reference, report.reflection_phase);
  }
  report.probability_after = marked_probability(state, predicate);
  return report;
}

}  // namespace qdenoise::circuits
