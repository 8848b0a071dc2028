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

#include "qdenoise/circuits/qft.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace qdenoise::circuits {

sim::Circuit build_qft(std::span<const int> qubits, bool inverse) {
  const int m = static_cast<int>(qubits.size());
  if (m < 1) throw std::invalid_argument("qft needs at least one qubit");

  sim::Circuit forward;
  for (int j = m - 1; j >= 0; --j) {
    forward.gates.push_back(sim::tagged(sim::Hadamard{qubits[j]}));
    for (int k = j - 1; k >= 0; --k) {
      const double angle = std::numbers::pi / static_cast<double>(std::uint64_t{1} << (j - k));
      forward.gates.push_back(sim::tagged(sim::ControlledPhase{qubits[k], qubits[j], angle}));
    }
  }
  for (int k = 0; k < m / 2; ++k) {
    forward.gates.push_back(sim::tagged(sim::Swap{qubits[k], qubits[m - 1 - k]}));
  }

  if (!inverse) {
    forward.label = "qft" + std::to_string(m);
    return forward;
  }
  sim::Circuit backward;
  backward.label = "iqft" + std::to_string(m);
  for (auto it = forward.gates.rbegin(); it != forward.gates.rend(); ++it) {
    sim::GateOp gate = *it;
    if (auto* cp = std::get_if<sim::ControlledPhase>(&gate.kind)) cp->angle = -cp->angle;
    backward.gates.push_back(gate);
  }
  return backward;
}

sim::Circuit build_qft(const sim::RegisterLayout& layout, bool inverse) {
  layout.validate();
  const auto qubits = layout.i_qubits();
  return build_qft(qubits, inverse);
}

std::size_t qft_gate_count(int m) {
  const auto n = static_cast<std::size_t>(m);
  return n + n * (n - 1) / 2 + n / 2;
}

}  // namespace qdenoise::circuits
