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

#include <string_view>

#include "qdenoise/circuits/oracle.hpp"
#include "qdenoise/sim/state_vector.hpp"

namespace qdenoise::circuits {

/// r = max(0, round(pi / (4 asin(sqrt(p))) - 1/2)), rounding half up.
/// Throws DomainError unless 0 < p <= 1.
int grover_iteration_count(double marked_probability);

/// `iterations` rounds of [oracle; reflect about `reference`].
void amplitude_amplify(sim::StateVector& state, const OraclePredicate& predicate, int iterations,
                       const sim::StateVector& reference);

/// Same, reflecting about the state as passed in.
void amplitude_amplify(sim::StateVector& state, const OraclePredicate& predicate, int iterations);

/// Uniform superposition over the `width` qubits at `offset`, with the
/// remaining registers weighted by the marginal of `state`. Reference for the
/// uniform-diffusion comparison mode.
sim::StateVector uniform_reference(const sim::StateVector& state, int offset, int width);

struct AmplificationReport {
  int standard_rounds = 0;
  bool phase_matched_round = false;
  double oracle_phase = 0.0;      // phase of the final S_chi
  double reflection_phase = 0.0;  // phase of the final generalized reflection
  double probability_before = 0.0;
  double probability_after = 0.0;
};

/// De-randomized amplitude amplification: floor(pi/(4 theta) - 1/2) standard
/// rounds, then one round with oracle phase and reflection phase matched so
/// that the unmarked component cancels. Ends in the normalized projection of
/// the input onto the marked subspace, up to a global phase.
AmplificationReport amplify_exact(sim::StateVector& state, const OraclePredicate& predicate);

}  // namespace qdenoise::circuits
