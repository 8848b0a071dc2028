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

#include "qdenoise/encoding/segmented_signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qdenoise/errors.hpp"

namespace qdenoise::encoding {
namespace {

int log2_exact(std::uint64_t value, const char* what) {
  if (value == 0 || (value & (value - 1)) != 0) {
    throw DimensionError(std::string(what) + " = " + std::to_string(value) +
                         " is not a power of two");
  }
  int bits = 0;
  while ((std::uint64_t{1} << bits) < value) ++bits;
  return bits;
}

}  // namespace

std::span<const int> SegmentedSignal::segment(std::uint64_t j) const {
  const auto M = window_size();
  return std::span<const int>(quantized).subspan(j * M, M);
}

double round_half_up(double x) { return std::floor(x + 0.5); }

SegmentedSignal segment_and_quantize(std::span<const double> y, std::uint64_t P,
                                     std::uint64_t M, int a, int b) {
  SegmentedSignal sig;
  sig.p = log2_exact(P, "P");
  sig.m = log2_exact(M, "M");
  if (sig.m < 1) throw DimensionError("window size M must be at least 2");
  if (a < 2 || a > 30) throw std::invalid_argument("quantization bits a must be in [2, 30]");
  if (y.size() != P * M) {
    throw DimensionError("signal length " + std::to_string(y.size()) + " != P*M = " +
                         std::to_string(P * M));
  }
  sig.a = a;
  sig.b = b == 0 ? sig.m : b;
  if (sig.b < sig.m) {
    throw std::invalid_argument("threshold register needs b >= m to hold tau up to M-1");
  }
  sig.samples.assign(y.begin(), y.end());
  for (double v : sig.samples) {
    if (!std::isfinite(v)) throw DomainError("signal contains a non-finite sample");
  }

  const auto [lo_it, hi_it] = std::minmax_element(sig.samples.begin(), sig.samples.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const int top = sig.max_code();
  sig.quantized.resize(sig.samples.size());
  if (hi > lo) {
    sig.scale = {lo, (hi - lo) / top};
    for (std::size_t k = 0; k < sig.samples.size(); ++k) {
      const double code = round_half_up((sig.samples[k] - lo) / sig.scale.factor);
      sig.quantized[k] = std::clamp(static_cast<int>(code), 0, top);
    }
  } else {
    const int mid = top / 2;
    sig.scale = {lo - mid, 1.0};
    std::fill(sig.quantized.begin(), sig.quantized.end(), mid);
  }
  return sig;
}

ThresholdRule ThresholdRule::linear(int tau_min, int tau_max, int reference_max) {
  if (tau_min < 0 || tau_max < tau_min) {
    throw std::invalid_argument("linear threshold rule needs 0 <= tau_min <= tau_max");
  }
  if (reference_max < 1) throw std::invalid_argument("reference_max must be >= 1");
  ThresholdRule rule;
  rule.kind_ = Kind::linear;
  rule.tau_min_ = tau_min;
  rule.tau_max_ = tau_max;
  rule.reference_max_ = reference_max;
  return rule;
}

ThresholdRule ThresholdRule::constant(int tau) {
  if (tau < 0) throw std::invalid_argument("constant threshold must be >= 0");
  ThresholdRule rule;
  rule.kind_ = Kind::constant;
  rule.tau_min_ = tau;
  rule.tau_max_ = tau;
  return rule;
}

ThresholdRule ThresholdRule::table(std::vector<int> tau_by_mean) {
  if (tau_by_mean.empty()) throw std::invalid_argument("threshold table is empty");
  for (int tau : tau_by_mean) {
    if (tau < 0) throw std::invalid_argument("threshold table entries must be >= 0");
  }
  ThresholdRule rule;
  rule.kind_ = Kind::table;
  rule.reference_max_ = static_cast<int>(tau_by_mean.size()) - 1;
  rule.table_ = std::move(tau_by_mean);
  return rule;
}

ThresholdRule ThresholdRule::default_for(int m, int a) {
  return linear(1, 1 << (m - 1), 1 << (a - 1));
}

int ThresholdRule::operator()(int mean, std::uint64_t M) const {
  const int top = static_cast<int>(M) - 1;
  switch (kind_) {
    case Kind::linear: {
      const double raw =
          tau_min_ + static_cast<double>(tau_max_ - tau_min_) * mean / reference_max_;
      return std::clamp(static_cast<int>(round_half_up(raw)), 0, top);
    }
    case Kind::constant:
      return std::clamp(tau_min_, 0, top);
    case Kind::table: {
      if (mean < 0 || static_cast<std::size_t>(mean) >= table_.size()) {
        throw DomainError("threshold table has no entry for mean " + std::to_string(mean));
      }
      return std::clamp(table_[static_cast<std::size_t>(mean)], 0, top);
    }
  }
  return 0;
}

std::string_view to_string(ThresholdRule::Kind kind) {
  switch (kind) {
    case ThresholdRule::Kind::linear:
      return "linear";
    case ThresholdRule::Kind::constant:
      return "constant";
    case ThresholdRule::Kind::table:
      return "table";
  }
  return "?";
}

SegmentStats compute_stats(const SegmentedSignal& sig, const ThresholdRule& rule) {
  SegmentStats stats;
  const auto P = sig.window_count();
  const auto M = sig.window_size();
  stats.means.resize(P);
  stats.thresholds.resize(P);
  for (std::uint64_t j = 0; j < P; ++j) {
    const auto seg = sig.segment(j);
    const double sum = std::accumulate(seg.begin(), seg.end(), 0.0);
    const int mean = static_cast<int>(round_half_up(sum / static_cast<double>(M)));
    const int tau = rule(mean, M);
    if (tau >= (1 << sig.b)) {
      throw CapacityError("threshold " + std::to_string(tau) + " of segment " +
                          std::to_string(j) + " does not fit in " + std::to_string(sig.b) +
                          " bits");
    }
    stats.means[j] = mean;
    stats.thresholds[j] = tau;
  }
  return stats;
}

}  // namespace qdenoise::encoding
