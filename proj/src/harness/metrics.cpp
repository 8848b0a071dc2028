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

#include "qdenoise/harness/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "qdenoise/errors.hpp"

namespace qdenoise::harness {
namespace {

double squared_error(std::span<const double> reference, std::span<const double> estimate) {
  if (reference.size() != estimate.size()) {
    throw DimensionError("reference has " + std::to_string(reference.size()) +
                         " samples, estimate has " + std::to_string(estimate.size()));
  }
  if (reference.empty()) throw DimensionError("empty signal");
  double err = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = reference[i] - estimate[i];
    err += d * d;
  }
  return err;
}

double ratio_db(double signal, double err) {
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / err);
}

}  // namespace

double snr_db(std::span<const double> reference, std::span<const double> estimate) {
  const double err = squared_error(reference, estimate);
  double power = 0.0;
  for (double v : reference) power += v * v;
  if (!(power > 0.0)) throw DomainError("reference signal has zero power");
  return ratio_db(power, err);
}

double psnr_db(std::span<const double> reference, std::span<const double> estimate) {
  const double err = squared_error(reference, estimate);
  const auto [lo, hi] = std::minmax_element(reference.begin(), reference.end());
  // Shift only when the reference dips below zero.
  const double peak = *hi - std::min(0.0, *lo);
  if (!(peak > 0.0)) throw DomainError("reference has no positive peak");
  return ratio_db(peak * peak * static_cast<double>(reference.size()), err);
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_number(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace qdenoise::harness
