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

#include "qdenoise/circuits/oracle.hpp"

#include <algorithm>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::circuits {

OracleMode parse_oracle_mode(std::string_view text) {
  if (text == "literal") return OracleMode::literal;
  if (text == "symmetric") return OracleMode::symmetric;
  throw std::invalid_argument("unknown oracle mode '" + std::string(text) + "'");
}

std::string_view to_string(OracleMode mode) {
  return mode == OracleMode::literal ? "literal" : "symmetric";
}

bool threshold_condition(OracleMode mode, std::uint64_t k, std::uint64_t tau, std::uint64_t M) {
  const std::uint64_t freq = mode == OracleMode::symmetric ? std::min(k, M - k) : k;
  return freq <= tau;
}

std::uint64_t marked_count(OracleMode mode, std::uint64_t tau, std::uint64_t M) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < M; ++k) count += threshold_condition(mode, k, tau, M) ? 1 : 0;
  return count;
}

OraclePredicate OraclePredicate::from_layout(OracleMode mode, const sim::RegisterLayout& layout) {
  layout.validate();
  OraclePredicate pred;
  pred.mode_ = mode;
  pred.i_offset_ = layout.i_offset();
  pred.i_mask_ = layout.window_size() - 1;
  pred.key_offset_ = layout.thre_offset();
  pred.key_mask_ = (std::uint64_t{1} << layout.b) - 1;
  return pred;
}

OraclePredicate OraclePredicate::from_table(OracleMode mode, int i_offset, int m, int j_offset,
                                            int p, std::vector<std::uint64_t> thresholds) {
  if (m < 1 || p < 0 || i_offset < 0 || j_offset < 0) {
    throw std::invalid_argument("oracle table: bad register geometry");
  }
  if (thresholds.size() != (std::size_t{1} << p)) {
    throw std::invalid_argument("oracle table needs one threshold per segment");
  }
  OraclePredicate pred;
  pred.mode_ = mode;
  pred.i_offset_ = i_offset;
  pred.i_mask_ = (std::uint64_t{1} << m) - 1;
  pred.key_offset_ = j_offset;
  pred.key_mask_ = (std::uint64_t{1} << p) - 1;
  pred.table_ = std::move(thresholds);
  return pred;
}

OraclePredicate OraclePredicate::from_set(std::vector<char> marked) {
  if (marked.empty()) throw std::invalid_argument("oracle set must not be empty");
  OraclePredicate pred;
  pred.set_ = std::move(marked);
  return pred;
}

void OraclePredicate::check_size(std::uint64_t size) const {
  if (!set_.empty() && set_.size() != size) {
    throw DimensionError("oracle set covers " + std::to_string(set_.size()) +
                         " basis states, state has " + std::to_string(size));
  }
}

void apply_oracle(sim::StateVector& state, const OraclePredicate& predicate, double phase) {
  predicate.check_size(state.size());
  auto amps = state.amplitudes();
  // polar(1, pi) carries a 1e-16 imaginary residue; keep the sign flip exact.
  const sim::Complex factor = phase == std::numbers::pi ? sim::Complex{-1.0} : std::polar(1.0, phase);
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (predicate.marks(idx)) amps[idx] *= factor;
  }
}

double marked_probability(const sim::StateVector& state, const OraclePredicate& predicate) {
  predicate.check_size(state.size());
  const auto amps = state.amplitudes();
  double p = 0.0;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (predicate.marks(idx)) p += std::norm(amps[idx]);
  }
  return p;
}

}  // namespace qdenoise::circuits
