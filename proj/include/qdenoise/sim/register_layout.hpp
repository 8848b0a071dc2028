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
#include <vector>

namespace qdenoise::sim {

inline constexpr int kDefaultMaxQubits = 26;

/// Qubit partition of the denoising register, least significant qubit first:
///
///   ancilla (0 or 1) | I (m) | Mean (a) | J (p) | Thre (b)
///
/// I holds the position inside a window of M = 2^m samples, J the window
/// index (P = 2^p windows). Mean and Thre hold the per-window mean and
/// threshold as basis values once the state is prepared.
struct RegisterLayout {
  int m = 1;
  int a = 1;
  int p = 0;
  int b = 1;
  bool has_ancilla = true;
  int max_qubits = kDefaultMaxQubits;

  struct Fields {
    std::uint64_t ancilla = 0;
    std::uint64_t i = 0;
    std::uint64_t mean = 0;
    std::uint64_t j = 0;
    std::uint64_t thre = 0;

    bool operator==(const Fields&) const = default;
  };

  // Throws std::invalid_argument for malformed register sizes and
  // CapacityError when the total exceeds max_qubits.
  void validate() const;

  int total_qubits() const { return (has_ancilla ? 1 : 0) + m + a + p + b; }
  std::uint64_t dimension() const { return std::uint64_t{1} << total_qubits(); }
  std::uint64_t window_size() const { return std::uint64_t{1} << m; }
  std::uint64_t window_count() const { return std::uint64_t{1} << p; }

  int ancilla_qubit() const { return 0; }
  int i_offset() const { return has_ancilla ? 1 : 0; }
  int mean_offset() const { return i_offset() + m; }
  int j_offset() const { return mean_offset() + a; }
  int thre_offset() const { return j_offset() + p; }

  std::vector<int> i_qubits() const;
  std::vector<int> mean_qubits() const;
  std::vector<int> j_qubits() const;
  std::vector<int> thre_qubits() const;

  std::uint64_t compose(const Fields& f) const;
  Fields decompose(std::uint64_t index) const;

  bool operator==(const RegisterLayout&) const = default;
};

}  // namespace qdenoise::sim
