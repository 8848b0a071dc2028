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

#include "qdenoise/sim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::sim {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_angle(double angle) {
  if (!std::isfinite(angle)) throw DomainError("gate angle must be finite");
}

void check_distinct(const StateVector& state, const std::vector<int>& qubits) {
  for (int q : qubits) state.check_qubit(q);
  for (std::size_t x = 0; x < qubits.size(); ++x) {
    for (std::size_t y = x + 1; y < qubits.size(); ++y) {
      if (qubits[x] == qubits[y]) {
        throw IndexError("qubit " + std::to_string(qubits[x]) + " used twice in one gate");
      }
    }
  }
}

std::uint64_t mask_of(const std::vector<int>& qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) mask |= std::uint64_t{1} << q;
  return mask;
}

// Scatters bit k of `values` onto qubits[k].
std::uint64_t scatter(const std::vector<int>& qubits, std::uint64_t values) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if ((values >> k) & 1U) out |= std::uint64_t{1} << qubits[k];
  }
  return out;
}

// Visits every index whose bits under `fixed_mask` equal `fixed_value`,
// enumerating the free bits as submasks of `free_mask`.
template <typename Fn>
void for_each_with_fixed(std::uint64_t free_mask, std::uint64_t fixed_value, Fn&& fn) {
  std::uint64_t sub = 0;
  do {
    fn(sub | fixed_value);
    sub = (sub - free_mask) & free_mask;
  } while (sub != 0);
}

// 2x2 unitary [[u00, u01], [u10, u11]] on `target`, restricted to indices
// matching (control_mask, control_value).
void apply_single(StateVector& state, int target, Complex u00, Complex u01, Complex u10,
                  Complex u11, std::uint64_t control_mask = 0, std::uint64_t control_value = 0) {
  auto amps = state.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << target;
  const std::uint64_t all = amps.size() - 1;
  const std::uint64_t free = all & ~control_mask & ~bit;
  std::uint64_t touched = 0;
  for_each_with_fixed(free, control_value, [&](std::uint64_t i0) {
    const std::uint64_t i1 = i0 | bit;
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = u00 * a0 + u01 * a1;
    amps[i1] = u10 * a0 + u11 * a1;
    touched += 2;
  });
  detail::add_amplitude_touches(touched);
}

void apply_hadamard(StateVector& state, int target) {
  auto amps = state.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << target;
  const double s = std::numbers::sqrt2 / 2.0;
  for (std::uint64_t hi = 0; hi < amps.size(); hi += 2 * bit) {
    for (std::uint64_t i0 = hi; i0 < hi + bit; ++i0) {
      const Complex a0 = amps[i0];
      const Complex a1 = amps[i0 + bit];
      amps[i0] = s * (a0 + a1);
      amps[i0 + bit] = s * (a0 - a1);
    }
  }
  detail::add_amplitude_touches(amps.size());
}

void apply_pauli_x(StateVector& state, int target) {
  auto amps = state.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << target;
  for (std::uint64_t hi = 0; hi < amps.size(); hi += 2 * bit) {
    for (std::uint64_t i0 = hi; i0 < hi + bit; ++i0) std::swap(amps[i0], amps[i0 + bit]);
  }
  detail::add_amplitude_touches(amps.size());
}

void apply_rz(StateVector& state, int target, double angle) {
  auto amps = state.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << target;
  const Complex lo = std::polar(1.0, -angle / 2.0);
  const Complex hi = std::polar(1.0, angle / 2.0);
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) amps[idx] *= (idx & bit) ? hi : lo;
  detail::add_amplitude_touches(amps.size());
}

void apply_controlled_phase(StateVector& state, int control, int target, double angle) {
  auto amps = state.amplitudes();
  const std::uint64_t both = (std::uint64_t{1} << control) | (std::uint64_t{1} << target);
  const Complex phase = std::polar(1.0, angle);
  const std::uint64_t free = (amps.size() - 1) & ~both;
  std::uint64_t touched = 0;
  for_each_with_fixed(free, both, [&](std::uint64_t idx) {
    amps[idx] *= phase;
    ++touched;
  });
  detail::add_amplitude_touches(touched);
}

void apply_swap(StateVector& state, int first, int second, std::uint64_t control_mask,
                std::uint64_t control_value) {
  auto amps = state.amplitudes();
  const std::uint64_t b1 = std::uint64_t{1} << first;
  const std::uint64_t b2 = std::uint64_t{1} << second;
  const std::uint64_t free = (amps.size() - 1) & ~(b1 | b2) & ~control_mask;
  std::uint64_t touched = 0;
  for_each_with_fixed(free, b1 | control_value, [&](std::uint64_t idx) {
    std::swap(amps[idx], amps[(idx & ~b1) | b2]);
    touched += 2;
  });
  detail::add_amplitude_touches(touched);
}

void apply_controlled_set(StateVector& state, const MultiControlledSet& gate) {
  const std::uint64_t flip = scatter(gate.targets, gate.pattern);
  if (flip == 0) return;
  auto amps = state.amplitudes();
  const std::uint64_t control_mask = mask_of(gate.controls);
  const std::uint64_t control_value = scatter(gate.controls, gate.control_values);
  // Pair each index with its partner under the XOR, visiting each pair once
  // through the member whose lowest flipped bit is clear.
  const std::uint64_t pivot = flip & (~flip + 1);
  const std::uint64_t free = (amps.size() - 1) & ~control_mask & ~pivot;
  std::uint64_t touched = 0;
  for_each_with_fixed(free, control_value, [&](std::uint64_t idx) {
    std::swap(amps[idx], amps[idx ^ flip]);
    touched += 2;
  });
  detail::add_amplitude_touches(touched);
}

}  // namespace

GateOp tagged(GateKind kind) { return GateOp{std::move(kind), NoiseTag::transform}; }

int primary_target(const GateOp& gate) {
  return std::visit(
      Overloaded{
          [](const Hadamard& g) { return g.target; },
          [](const PauliX& g) { return g.target; },
          [](const Ry& g) { return g.target; },
          [](const Rz& g) { return g.target; },
          [](const ControlledPhase& g) { return g.target; },
          [](const Swap& g) { return g.second; },
          [](const MultiControlledRy& g) { return g.target; },
          [](const MultiControlledSet& g) { return g.targets.empty() ? -1 : g.targets.front(); },
      },
      gate.kind);
}

std::vector<int> qubits_of(const GateOp& gate) {
  return std::visit(
      Overloaded{
          [](const Hadamard& g) {
            auto q = g.controls;
            q.push_back(g.target);
            return q;
          },
          [](const PauliX& g) { return std::vector<int>{g.target}; },
          [](const Ry& g) { return std::vector<int>{g.target}; },
          [](const Rz& g) { return std::vector<int>{g.target}; },
          [](const ControlledPhase& g) { return std::vector<int>{g.control, g.target}; },
          [](const Swap& g) {
            auto q = g.controls;
            q.push_back(g.first);
            q.push_back(g.second);
            return q;
          },
          [](const MultiControlledRy& g) {
            auto q = g.controls;
            q.push_back(g.target);
            return q;
          },
          [](const MultiControlledSet& g) {
            auto q = g.controls;
            q.insert(q.end(), g.targets.begin(), g.targets.end());
            return q;
          },
      },
      gate.kind);
}

bool is_hadamard(const GateOp& gate) { return std::holds_alternative<Hadamard>(gate.kind); }

std::string gate_name(const GateOp& gate) {
  static constexpr const char* kNames[] = {"H", "X", "RY", "RZ", "CPHASE", "SWAP", "MCRY", "MCSET"};
  return kNames[gate.kind.index()];
}

void apply_gate(StateVector& state, const GateOp& gate) {
  check_distinct(state, qubits_of(gate));
  std::visit(
      Overloaded{
          [&](const Hadamard& g) {
            if (g.controls.empty()) {
              apply_hadamard(state, g.target);
            } else {
              const double h = std::numbers::sqrt2 / 2.0;
              apply_single(state, g.target, h, h, h, -h, mask_of(g.controls),
                           scatter(g.controls, g.control_values));
            }
          },
          [&](const PauliX& g) { apply_pauli_x(state, g.target); },
          [&](const Ry& g) {
            check_angle(g.angle);
            const double c = std::cos(g.angle / 2.0);
            const double s = std::sin(g.angle / 2.0);
            apply_single(state, g.target, c, -s, s, c);
          },
          [&](const Rz& g) {
            check_angle(g.angle);
            apply_rz(state, g.target, g.angle);
          },
          [&](const ControlledPhase& g) {
            check_angle(g.angle);
            apply_controlled_phase(state, g.control, g.target, g.angle);
          },
          [&](const Swap& g) {
            apply_swap(state, g.first, g.second, mask_of(g.controls),
                       scatter(g.controls, g.control_values));
          },
          [&](const MultiControlledRy& g) {
            check_angle(g.angle);
            const double c = std::cos(g.angle / 2.0);
            const double s = std::sin(g.angle / 2.0);
            apply_single(state, g.target, c, -s, s, c, mask_of(g.controls),
                         scatter(g.controls, g.control_values));
          },
          [&](const MultiControlledSet& g) { apply_controlled_set(state, g); },
      },
      gate.kind);
}

}  // namespace qdenoise::sim
