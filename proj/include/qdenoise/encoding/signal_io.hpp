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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace qdenoise::encoding {

/// Reads a signal as either one value per line or CSV with a `value` column.
/// Blank lines and lines starting with '#' are skipped.
std::vector<double> read_signal(std::istream& in);
std::vector<double> read_signal(const std::filesystem::path& path);

/// Writes one value per line with 17 significant digits.
void write_signal(std::ostream& out, std::span<const double> values);
void write_signal(const std::filesystem::path& path, std::span<const double> values);

}  // namespace qdenoise::encoding
