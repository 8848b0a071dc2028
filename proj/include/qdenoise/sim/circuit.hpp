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

#include <string>
#include <vector>

#include "qdenoise/sim/gate.hpp"

namespace qdenoise::sim {

struct Circuit {
  std::vector<GateOp> gates;
  std::string label;

  std::vector<int> qubit_span() const;
  std::size_t size() const { return gates.size(); }
  void append(const Circuit& other);
};

/// Stochastic gate injection after tagged gates. Implementations own their
/// random stream; one hook instance serves one run.
class NoiseHook {
 public:
  virtual ~NoiseHook() = default;
  // Called after `applied` has acted; pushes any extra gates to apply.
  virtual void inject(const GateOp& applied, std::vector<GateOp>& extra) = 0;
};

/// Applies gates in order; after each tagged gate the hook (if any) may add
/// gates, which are applied immediately and are not themselves hooked.
void apply_circuit(StateVector& state, const Circuit& circuit, NoiseHook* hook = nullptr);

}  // namespace qdenoise::sim
