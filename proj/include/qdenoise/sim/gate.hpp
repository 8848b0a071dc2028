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
#include <string>
#include <variant>
#include <vector>

#include "qdenoise/sim/state_vector.hpp"

namespace qdenoise::sim {

// Hadamard and Swap accept optional zero-or-more controls; bit k of
// control_values is the required value of controls[k].
struct Hadamard {
  int target = 0;
  std::vector<int> controls = {};
  std::uint64_t control_values = 0;
};

struct PauliX {
  int target = 0;
};

// exp(-i angle Y / 2)
struct Ry {
  int target = 0;
  double angle = 0.0;
};

// exp(-i angle Z / 2)
struct Rz {
  int target = 0;
  double angle = 0.0;
};

// diag(1, 1, 1, e^{i angle}) on (control, target).
struct ControlledPhase {
  int control = 0;
  int target = 0;
  double angle = 0.0;
};

struct Swap {
  int first = 0;
  int second = 0;
  std::vector<int> controls = {};
  std::uint64_t control_values = 0;
};

// Ry on `target` when controls[k] == bit k of control_values for every k.
struct MultiControlledRy {
  std::vector<int> controls;
  std::uint64_t control_values = 0;
  int target = 0;
  double angle = 0.0;
};

// Controlled value setting: XORs bit k of `pattern` into targets[k] when the
// controls match. Acting on targets in |0>, this writes the pattern.
struct MultiControlledSet {
  std::vector<int> controls;
  std::uint64_t control_values = 0;
  std::vector<int> targets;
  std::uint64_t pattern = 0;
};

using GateKind = std::variant<Hadamard, PauliX, Ry, Rz, ControlledPhase, Swap,
                              MultiControlledRy, MultiControlledSet>;

// Noise hooks only fire on gates tagged as basic transform operations.
enum class NoiseTag : std::uint8_t { none, transform };

struct GateOp {
  GateKind kind;
  NoiseTag tag = NoiseTag::none;
};

GateOp tagged(GateKind kind);

// Qubit the gate acts on for noise purposes: the target, or the second qubit
// of a swap.
int primary_target(const GateOp& gate);
std::vector<int> qubits_of(const GateOp& gate);
bool is_hadamard(const GateOp& gate);
std::string gate_name(const GateOp& gate);

/// Applies the gate's unitary in place. Throws IndexError for out-of-range or
/// repeated qubits and DomainError for non-finite angles.
void apply_gate(StateVector& state, const GateOp& gate);

}  // namespace qdenoise::sim
