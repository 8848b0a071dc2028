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
#include <numbers>
#include <string_view>
#include <vector>

#include "qdenoise/sim/register_layout.hpp"
#include "qdenoise/sim/state_vector.hpp"

namespace qdenoise::circuits {

/// literal: k <= tau. symmetric: min(k, M - k) <= tau.
enum class OracleMode { literal, symmetric };

OracleMode parse_oracle_mode(std::string_view text);
std::string_view to_string(OracleMode mode);

bool threshold_condition(OracleMode mode, std::uint64_t k, std::uint64_t tau, std::uint64_t M);

/// Number of frequencies k in [0, M) marked for threshold tau (M_j).
std::uint64_t marked_count(OracleMode mode, std::uint64_t tau, std::uint64_t M);

/// Decides, per basis index, whether the frequency k held by the I register
/// passes the threshold tau of the same basis state.
///
/// With a pipeline layout tau is read from the Thre register. With a table,
/// tau is looked up by the J register value, which is what Thre holds after
/// preparation; the compact backend uses this form.
class OraclePredicate {
 public:
  static OraclePredicate from_layout(OracleMode mode, const sim::RegisterLayout& layout);
  static OraclePredicate from_table(OracleMode mode, int i_offset, int m, int j_offset, int p,
                                    std::vector<std::uint64_t> thresholds);
  /// Arbitrary marked set: marks(idx) == marked[idx] != 0.
  static OraclePredicate from_set(std::vector<char> marked);

  bool marks(std::uint64_t index) const {
    if (!set_.empty()) return set_[index] != 0;
    const std::uint64_t k = (index >> i_offset_) & i_mask_;
    const std::uint64_t key = (index >> key_offset_) & key_mask_;
    const std::uint64_t tau = table_.empty() ? key : table_[key];
    return threshold_condition(mode_, k, tau, i_mask_ + 1);
  }
  bool operator()(std::uint64_t index) const { return marks(index); }

  /// Throws DimensionError if a set-based predicate does not cover `size`
  /// basis states.
  void check_size(std::uint64_t size) const;

  OracleMode mode() const { return mode_; }
  std::uint64_t window_size() const { return i_mask_ + 1; }

 private:
  OracleMode mode_ = OracleMode::symmetric;
  int i_offset_ = 0;
  std::uint64_t i_mask_ = 0;
  int key_offset_ = 0;
  std::uint64_t key_mask_ = 0;
  std::vector<std::uint64_t> table_;
  std::vector<char> set_;
};

/// Multiplies every marked amplitude by e^{i phase}; phase = pi is the
/// standard sign-flip oracle.
void apply_oracle(sim::StateVector& state, const OraclePredicate& predicate,
                  double phase = std::numbers::pi);

/// Total probability carried by marked basis states.
double marked_probability(const sim::StateVector& state, const OraclePredicate& predicate);

}  // namespace qdenoise::circuits
