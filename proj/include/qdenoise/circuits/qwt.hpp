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

#include <span>

#include "qdenoise/sim/circuit.hpp"
#include "qdenoise/sim/register_layout.hpp"

namespace qdenoise::circuits {

/// Orthonormal Haar pyramid over `qubits` (least significant first).
///
/// Each level pairs neighbouring coefficients of the current approximation
/// block with a Hadamard on its lowest qubit (approximation (x+y)/sqrt2 on
/// bit 0 = 0, detail (x-y)/sqrt2 on bit 1), then rotates that bit to the top
/// of the block with a swap chain. Levels after the first are controlled on
/// the already-finished detail bits being zero. Output is in subband order
/// [A_L | D_L | D_{L-1} | ... | D_1].
sim::Circuit build_qwt_haar(std::span<const int> qubits, int levels, bool inverse);

sim::Circuit build_qwt_haar(const sim::RegisterLayout& layout, int levels, bool inverse);

}  // namespace qdenoise::circuits
