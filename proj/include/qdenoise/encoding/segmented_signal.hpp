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
#include <span>
#include <string_view>
#include <vector>

namespace qdenoise::encoding {

/// Affine map between quantized codes and the original signal scale:
/// value = offset + factor * code.
struct QuantizationMap {
  double offset = 0.0;
  double factor = 1.0;

  double to_value(double code) const { return offset + factor * code; }
};

/// Classical signal split into P = 2^p windows of M = 2^m samples, with codes
/// s_ji in [0, 2^(a-1)] so the encoding angle pi s / 2^a stays in [0, pi/2].
struct SegmentedSignal {
  std::vector<double> samples;
  std::vector<int> quantized;
  int m = 1;
  int p = 0;
  int a = 1;
  int b = 1;
  QuantizationMap scale;

  std::uint64_t window_size() const { return std::uint64_t{1} << m; }
  std::uint64_t window_count() const { return std::uint64_t{1} << p; }
  std::uint64_t length() const { return window_size() * window_count(); }
  int max_code() const { return 1 << (a - 1); }
  std::span<const int> segment(std::uint64_t j) const;
};

/// Round half up: floor(x + 1/2). Used for every rounding in the encoder.
double round_half_up(double x);

/// Affinely maps [min(y), max(y)] onto [0, 2^(a-1)] and rounds. A constant
/// signal maps to the midpoint code 2^(a-2). `b` defaults to m.
SegmentedSignal segment_and_quantize(std::span<const double> y, std::uint64_t P,
                                     std::uint64_t M, int a, int b = 0);

class ThresholdRule {
 public:
  enum class Kind { linear, constant, table };

  /// clamp(round(tau_min + (tau_max - tau_min) * A / reference_max), 0, M-1)
  static ThresholdRule linear(int tau_min, int tau_max, int reference_max);
  static ThresholdRule constant(int tau);
  /// tau_by_mean[A] for A in [0, size).
  static ThresholdRule table(std::vector<int> tau_by_mean);
  /// Linear with tau_min = 1, tau_max = M/2, reference 2^(a-1).
  static ThresholdRule default_for(int m, int a);

  int operator()(int mean, std::uint64_t M) const;

  Kind kind() const { return kind_; }
  int tau_min() const { return tau_min_; }
  int tau_max() const { return tau_max_; }
  int reference_max() const { return reference_max_; }
  const std::vector<int>& tau_table() const { return table_; }

 private:
  Kind kind_ = Kind::linear;
  int tau_min_ = 1;
  int tau_max_ = 1;
  int reference_max_ = 1;
  std::vector<int> table_;
};

std::string_view to_string(ThresholdRule::Kind kind);

/// Per-window mean A_j (a-bit code) and threshold tau(A_j) (b-bit value).
struct SegmentStats {
  std::vector<int> means;
  std::vector<int> thresholds;
};

/// A_j = round(mean of window j codes); tau_j = rule(A_j). Throws
/// CapacityError when a threshold needs more than b bits.
SegmentStats compute_stats(const SegmentedSignal& sig, const ThresholdRule& rule);

}  // namespace qdenoise::encoding
