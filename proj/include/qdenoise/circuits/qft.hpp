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

#include <cstddef>
#include <span>
#include <vector>

#include "qdenoise/sim/circuit.hpp"
#include "qdenoise/sim/register_layout.hpp"

namespace qdenoise::circuits {

/// QFT over `qubits` (least significant first), mapping |x> to
/// M^{-1/2} sum_k exp(2 pi i x k / M) |k>; the inverse flips the sign.
///
/// Gates: m Hadamards, m(m-1)/2 controlled phases and floor(m/2) swaps, each
/// swap counted as one primitive. All gates carry the transform noise tag.
sim::Circuit build_qft(std::span<const int> qubits, bool inverse);

/// QFT on the I register of a pipeline layout.
sim::Circuit build_qft(const sim::RegisterLayout& layout, bool inverse);

/// m + m(m-1)/2 + floor(m/2).
std::size_t qft_gate_count(int m);

}  // namespace qdenoise::circuits
