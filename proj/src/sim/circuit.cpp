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

#include "qdenoise/sim/circuit.hpp"

#include <algorithm>

namespace qdenoise::sim {

std::vector<int> Circuit::qubit_span() const {
  std::vector<int> span;
  for (const auto& gate : gates) {
    for (int q : qubits_of(gate)) span.push_back(q);
  }
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  return span;
}

void Circuit::append(const Circuit& other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

void apply_circuit(StateVector& state, const Circuit& circuit, NoiseHook* hook) {
  std::vector<GateOp> extra;
  for (const auto& gate : circuit.gates) {
    apply_gate(state, gate);
    if (hook == nullptr || gate.tag != NoiseTag::transform) continue;
    extra.clear();
    hook->inject(gate, extra);
    for (const auto& injected : extra) apply_gate(state, injected);
  }
}

}  // namespace qdenoise::sim
