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

#include "qdenoise/circuits/qwt.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qdenoise::circuits {

sim::Circuit build_qwt_haar(std::span<const int> qubits, int levels, bool inverse) {
  const int n = static_cast<int>(qubits.size());
  if (levels < 1 || levels > n) {
    throw std::invalid_argument("qwt levels " + std::to_string(levels) + " outside [1, " +
                                std::to_string(n) + "]");
  }
  sim::Circuit forward;
  for (int level = 0; level < levels; ++level) {
    const int active = n - level;
    const std::vector<int> controls(qubits.begin() + active, qubits.end());
    forward.gates.push_back(sim::tagged(sim::Hadamard{qubits[0], controls, 0}));
    for (int k = 0; k + 1 < active; ++k) {
      forward.gates.push_back(sim::tagged(sim::Swap{qubits[k], qubits[k + 1], controls, 0}));
    }
  }
  if (!inverse) {
    forward.label = "qwt-haar" + std::to_string(levels);
    return forward;
  }
  sim::Circuit backward;
  backward.label = "iqwt-haar" + std::to_string(levels);
  backward.gates.assign(forward.gates.rbegin(), forward.gates.rend());
  return backward;
}

sim::Circuit build_qwt_haar(const sim::RegisterLayout& layout, int levels, bool inverse) {
  layout.validate();
  const auto qubits = layout.i_qubits();
  return build_qwt_haar(qubits, levels, inverse);
}

}  // namespace qdenoise::circuits
