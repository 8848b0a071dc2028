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

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace qdenoise::harness {

/// 10 log10(sum ref^2 / sum (ref - est)^2); +inf when the error is exactly 0.
/// Throws DimensionError on a length mismatch and DomainError when the
/// reference has zero power.
double snr_db(std::span<const double> reference, std::span<const double> estimate);

/// 10 log10(peak^2 N / sum (ref - est)^2) with peak = max(ref) - min(ref),
/// the largest magnitude of the reference once shifted to start at 0.
double psnr_db(std::span<const double> reference, std::span<const double> estimate);

/// Shortest text with 17 significant digits; infinities print as `inf` and
/// `-inf`, NaN as `nan`.
std::string format_number(double value);

/// Inverse of format_number. Returns nullopt on malformed input.
std::optional<double> parse_number(std::string_view text);

}  // namespace qdenoise::harness
